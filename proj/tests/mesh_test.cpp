#include "wedgemass/mesh.hpp"

#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "wedgemass/exact_oracle.hpp"
#include "wedgemass/mass_kernels.hpp"
#include "wedgemass/study.hpp"

using namespace wedgemass;
using nlohmann::json;

namespace {

json node_json(std::int64_t id, double x, double y, double z) {
  return json{{"id", id}, {"x", x}, {"y", y}, {"z", z}};
}

// Single parent element, nodes 1..6.
json single_element_doc() {
  json doc;
  doc["density"] = 1.0;
  doc["nodes"] = json::array({
      node_json(1, 0, 0, -1), node_json(2, 1, 0, -1), node_json(3, 0, 1, -1),
      node_json(4, 0, 0, 1), node_json(5, 1, 0, 1), node_json(6, 0, 1, 1),
  });
  doc["elements"] = json::array({json::array({1, 2, 3, 4, 5, 6})});
  return doc;
}

// Two wedges stacked along z: the upper element's lower face is the shared
// plane z = +1.
json stacked_doc() {
  json doc = single_element_doc();
  doc["nodes"].push_back(node_json(7, 0, 0, 3));
  doc["nodes"].push_back(node_json(8, 1, 0, 3));
  doc["nodes"].push_back(node_json(9, 0, 1, 3));
  doc["elements"].push_back(json::array({4, 5, 6, 7, 8, 9}));
  return doc;
}

double dense_entry(const GlobalMassMatrix& g, std::size_t row, std::size_t col) {
  const std::size_t r = std::min(row, col);
  const std::size_t c = std::max(row, col);
  for (const auto& t : g.triplets) {
    if (t.row == r && t.col == c) return t.value;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("parse a single-element mesh") {
  const Mesh mesh = parse_mesh(single_element_doc());
  CHECK(mesh.nodes.size() == 6);
  CHECK(mesh.elements.size() == 1);
  CHECK(mesh.density == 1.0);
  const WedgeElement e = mesh.element(0);
  CHECK(e.nodes[4] == Vec3{1.0, 0.0, 1.0});
  CHECK(valid_metric(e));
}

TEST_CASE("parse rejects structural defects") {
  json dangling = single_element_doc();
  dangling["elements"][0][5] = 99;
  CHECK_THROWS_WITH_AS(parse_mesh(dangling),
                       doctest::Contains("unknown node id 99"), InputError);

  json zero_density = single_element_doc();
  zero_density["density"] = 0.0;
  CHECK_THROWS_WITH_AS(parse_mesh(zero_density),
                       doctest::Contains("density"), InputError);

  json duplicate = single_element_doc();
  duplicate["nodes"][3]["id"] = 2;
  CHECK_THROWS_WITH_AS(parse_mesh(duplicate),
                       doctest::Contains("duplicate node id 2"), InputError);

  json no_elements = single_element_doc();
  no_elements["elements"] = json::array();
  CHECK_THROWS_AS(parse_mesh(no_elements), InputError);

  json short_element = single_element_doc();
  short_element["elements"][0] = json::array({1, 2, 3, 4, 5});
  CHECK_THROWS_AS(parse_mesh(short_element), InputError);

  CHECK_THROWS_AS(parse_mesh(json::array({1, 2, 3})), InputError);
  CHECK_THROWS_AS(parse_mesh_file("/nonexistent/mesh.json"), InputError);
}

TEST_CASE("invalid elements: warning by default, error under strict") {
  json doc = single_element_doc();
  // Swap the triangular faces; the metric goes negative everywhere.
  doc["elements"][0] = json::array({4, 5, 6, 1, 2, 3});

  std::vector<std::string> warnings;
  const Mesh mesh = parse_mesh(doc, /*strict=*/false, &warnings);
  CHECK(mesh.elements.size() == 1);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("element 0") != std::string::npos);
  CHECK(warnings[0].find("sample point") != std::string::npos);

  CHECK_THROWS_AS(parse_mesh(doc, /*strict=*/true), ValidationError);
}

TEST_CASE("assembling one element reproduces the element matrix") {
  const Mesh mesh = parse_mesh(single_element_doc());
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::ex, MatrixKind::consistent);
  CHECK(g.size == 6);
  const MassMatrix m = consistent_ex(mesh.element(0));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(dense_entry(g, i, j) == doctest::Approx(m(i, j)).epsilon(1e-15));
    }
  }
  CHECK(g.total() == doctest::Approx(m.total()).epsilon(1e-13));
}

TEST_CASE("two disjoint elements assemble block-diagonally") {
  json doc = single_element_doc();
  for (int i = 0; i < 6; ++i) {
    const auto& p = natural_nodes()[i];
    doc["nodes"].push_back(node_json(11 + i, p.xi + 5.0, p.eta, p.zeta));
  }
  doc["elements"].push_back(json::array({11, 12, 13, 14, 15, 16}));

  const Mesh mesh = parse_mesh(doc);
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::cm, MatrixKind::consistent);
  CHECK(g.size == 12);
  CHECK(g.total() == doctest::Approx(2.0).epsilon(1e-13));
  for (const auto& t : g.triplets) {
    const bool first = t.row < 6;
    const bool second = t.col < 6;
    CHECK(first == second);  // no coupling between the two blocks
  }
}

TEST_CASE("stacked wedges: shared nodes accumulate both contributions") {
  const Mesh mesh = parse_mesh(stacked_doc());
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::ex, MatrixKind::consistent);
  const MassMatrix lower = consistent_ex(mesh.element(0));
  const MassMatrix upper = consistent_ex(mesh.element(1));
  // Global nodes 4, 5, 6 sit at dof 3, 4, 5; they are nodes 3..5 of the
  // lower element and nodes 0..2 of the upper one.
  for (int k = 0; k < 3; ++k) {
    CHECK(dense_entry(g, 3 + k, 3 + k) ==
          doctest::Approx(lower(3 + k, 3 + k) + upper(k, k)).epsilon(1e-14));
  }
  CHECK(dense_entry(g, 0, 0) == doctest::Approx(lower(0, 0)).epsilon(1e-15));
  CHECK(dense_entry(g, 6, 6) == doctest::Approx(upper(3, 3)).epsilon(1e-15));
  CHECK(g.total() ==
        doctest::Approx(lower.total() + upper.total()).epsilon(1e-13));
}

TEST_CASE("total mass is conserved for every scheme and kind") {
  const Mesh mesh = parse_mesh(stacked_doc());
  double expected = 0.0;
  for (std::size_t i = 0; i < mesh.elements.size(); ++i) {
    expected += exact_consistent(mesh.element(i)).total();
  }
  for (Scheme s : {Scheme::ex, Scheme::reference}) {
    CHECK(assemble_global(mesh, s, MatrixKind::consistent).total() ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(assemble_global(mesh, s, MatrixKind::lumped).total() ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  // Interpolating schemes conserve their own interpolated volume instead.
  for (Scheme s : {Scheme::cm, Scheme::lm, Scheme::gauss9}) {
    const GlobalMassMatrix g = assemble_global(mesh, s, MatrixKind::consistent);
    double per_element = 0.0;
    for (std::size_t i = 0; i < mesh.elements.size(); ++i) {
      per_element += consistent_mass(mesh.element(i), s).total();
    }
    CHECK(g.total() == doctest::Approx(per_element).epsilon(1e-12));
  }
}

TEST_CASE("lumped assembly is diagonal") {
  const Mesh mesh = parse_mesh(stacked_doc());
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::lm, MatrixKind::lumped);
  CHECK(g.triplets.size() == 9);
  for (const auto& t : g.triplets) CHECK(t.row == t.col);
}

TEST_CASE("assembly is equivariant under node permutations") {
  const json doc = stacked_doc();
  const Mesh mesh = parse_mesh(doc);
  const GlobalMassMatrix base = assemble_global(mesh, Scheme::ex, MatrixKind::consistent);

  // Reverse the node array; ids and elements stay the same, so dof k moves
  // to dof n-1-k.
  json reversed = doc;
  std::reverse(reversed["nodes"].begin(), reversed["nodes"].end());
  const Mesh permuted_mesh = parse_mesh(reversed);
  const GlobalMassMatrix permuted =
      assemble_global(permuted_mesh, Scheme::ex, MatrixKind::consistent);

  const std::size_t n = mesh.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(dense_entry(base, i, j) ==
            doctest::Approx(dense_entry(permuted, n - 1 - i, n - 1 - j))
                .epsilon(1e-15));
    }
  }
}

TEST_CASE("triplets are sorted with row <= col") {
  const Mesh mesh = parse_mesh(stacked_doc());
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::ex, MatrixKind::consistent);
  for (std::size_t k = 0; k < g.triplets.size(); ++k) {
    CHECK(g.triplets[k].row <= g.triplets[k].col);
    if (k > 0) {
      const auto& prev = g.triplets[k - 1];
      const auto& cur = g.triplets[k];
      CHECK((prev.row < cur.row || (prev.row == cur.row && prev.col < cur.col)));
    }
  }
}

TEST_CASE("global matrix serialization") {
  const Mesh mesh = parse_mesh(single_element_doc());
  const GlobalMassMatrix g = assemble_global(mesh, Scheme::cm, MatrixKind::consistent);

  const std::string csv = global_coo_csv(g);
  CHECK(csv.rfind("row,col,value\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 21);  // upper triangle

  const auto doc = global_json(g, mesh);
  CHECK(doc["size"] == 6);
  CHECK(doc["node_ids"].size() == 6);
  CHECK(doc["triplets"].size() == 21);
}
