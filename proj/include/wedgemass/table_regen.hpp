#pragma once

#include <string>
#include <vector>

#include "wedgemass/exact_oracle.hpp"

namespace wedgemass {

/// One entry where analytic integration disagrees with the stored integer
/// coefficient tables. col is -1 for the lumped (diagonal) vectors.
struct TableMismatch {
  std::string table;
  int row = 0;
  int col = -1;
  long long stored = 0;
  Rational integrated;

  std::string describe() const;
};

/// Re-derives every integer coefficient table by exact rational integration
/// of the shape-function products against the interpolation coefficient
/// functions, scaled by the stored divisor. An empty result means every
/// table entry matches bit for bit; anything else is an erratum.
std::vector<TableMismatch> regenerate_coefficient_tables();

}  // namespace wedgemass
