#include "wedgemass/table_regen.hpp"

#include "doctest.h"

using namespace wedgemass;

TEST_CASE("every coefficient table regenerates exactly from analytic integration") {
  const std::vector<TableMismatch> mismatches = regenerate_coefficient_tables();
  for (const TableMismatch& m : mismatches) {
    MESSAGE(m.describe());
  }
  CHECK(mismatches.empty());
}

TEST_CASE("mismatch descriptions carry the exact integrated value") {
  TableMismatch m;
  m.table = "demo";
  m.row = 1;
  m.col = 2;
  m.stored = 7;
  m.integrated = Rational(22, 3);
  CHECK(m.describe() == "demo entry (2, 3): stored 7, integrated 22/3");

  TableMismatch v;
  v.table = "demo lumped";
  v.row = 0;
  v.col = -1;
  v.stored = -1;
  v.integrated = Rational(4);
  CHECK(v.describe() == "demo lumped entry (1): stored -1, integrated 4");
}
