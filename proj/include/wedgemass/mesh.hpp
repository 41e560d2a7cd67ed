#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "wedgemass/element.hpp"
#include "wedgemass/errors.hpp"
#include "wedgemass/mass_matrix.hpp"
#include "wedgemass/scheme.hpp"

namespace wedgemass {

/// Wedge mesh with uniform density. Node ids are arbitrary unique integers;
/// elements list six node ids in the canonical ordering (three on the lower
/// triangular face, three above them).
struct Mesh {
  struct Node {
    std::int64_t id = 0;
    Vec3 coords{};
  };

  std::vector<Node> nodes;
  std::vector<std::array<std::int64_t, 6>> elements;
  double density = 1.0;

  /// Resolves element node ids to coordinates. Throws InputError on a
  /// dangling reference.
  WedgeElement element(std::size_t index) const;
};

/// Parses and validates a mesh document of the form
///   {"nodes": [{"id": 1, "x": 0, "y": 0, "z": -1}, ...],
///    "elements": [[1, 2, 3, 4, 5, 6], ...],
///    "density": 1.0}.
/// Structural problems (malformed document, duplicate node id, dangling
/// element reference, non-positive density, empty element list) throw
/// InputError. Elements with a non-positive metric at one of the seven
/// sample points are reported through `warnings` with the element index and
/// the offending point; under strict they raise ValidationError instead.
Mesh parse_mesh(const nlohmann::json& doc, bool strict = false,
                std::vector<std::string>* warnings = nullptr);

Mesh parse_mesh_file(const std::string& path, bool strict = false,
                     std::vector<std::string>* warnings = nullptr);

/// Scalar global mass matrix in symmetric coordinate storage: one degree of
/// freedom per node (the per-direction blocks are identical), triplets with
/// row <= col sorted lexicographically. Row/column indices are positions in
/// the mesh's node array.
struct GlobalMassMatrix {
  struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;
  };

  std::size_t size = 0;
  std::vector<Triplet> triplets;

  /// Total mass, counting each off-diagonal entry and its mirror.
  double total() const;
};

/// Scatter-adds every element matrix into the global matrix. Element
/// matrices may be computed in any order; accumulation is an ordered
/// reduction, so the output is reproducible byte for byte.
GlobalMassMatrix assemble_global(const Mesh& mesh, Scheme scheme,
                                 MatrixKind kind);

/// "row,col,value" lines (17 significant digits) under a header row.
std::string global_coo_csv(const GlobalMassMatrix& g);

/// {"size": n, "node_ids": [...], "triplets": [[row, col, value], ...]}.
nlohmann::ordered_json global_json(const GlobalMassMatrix& g, const Mesh& mesh);

}  // namespace wedgemass
