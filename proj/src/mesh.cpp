#include "wedgemass/mesh.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "wedgemass/mass_kernels.hpp"

namespace wedgemass {

namespace {

std::unordered_map<std::int64_t, std::size_t> node_index(const Mesh& mesh) {
  std::unordered_map<std::int64_t, std::size_t> index;
  index.reserve(mesh.nodes.size());
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    index.emplace(mesh.nodes[i].id, i);
  }
  return index;
}

double require_number(const nlohmann::json& j, const char* context) {
  if (!j.is_number()) {
    throw InputError(std::string("mesh: expected a number for ") + context);
  }
  return j.get<double>();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

WedgeElement Mesh::element(std::size_t index) const {
  const auto lookup = node_index(*this);
  WedgeElement e;
  for (int k = 0; k < 6; ++k) {
    const std::int64_t id = elements.at(index)[k];
    const auto it = lookup.find(id);
    if (it == lookup.end()) {
      throw InputError("mesh: element " + std::to_string(index) +
                       " references unknown node id " + std::to_string(id));
    }
    e.nodes[k] = nodes[it->second].coords;
  }
  e.density = density;
  return e;
}

Mesh parse_mesh(const nlohmann::json& doc, bool strict,
                std::vector<std::string>* warnings) {
  if (!doc.is_object()) throw InputError("mesh: document must be a JSON object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw InputError("mesh: missing \"nodes\" array");
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw InputError("mesh: missing \"elements\" array");
  }
  if (!doc.contains("density")) throw InputError("mesh: missing \"density\"");

  Mesh mesh;
  mesh.density = require_number(doc["density"], "\"density\"");
  if (!(mesh.density > 0.0)) {
    throw InputError("mesh: density must be positive, got " +
                     format_double(mesh.density));
  }

  std::unordered_set<std::int64_t> seen;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_object() || !n.contains("id") || !n.contains("x") ||
        !n.contains("y") || !n.contains("z")) {
      throw InputError("mesh: each node needs fields id, x, y, z");
    }
    if (!n["id"].is_number_integer()) {
      throw InputError("mesh: node id must be an integer");
    }
    Mesh::Node node;
    node.id = n["id"].get<std::int64_t>();
    node.coords = {require_number(n["x"], "node x"),
                   require_number(n["y"], "node y"),
                   require_number(n["z"], "node z")};
    if (!seen.insert(node.id).second) {
      throw InputError("mesh: duplicate node id " + std::to_string(node.id));
    }
    mesh.nodes.push_back(node);
  }

  for (const auto& conn : doc["elements"]) {
    if (!conn.is_array() || conn.size() != 6) {
      throw InputError("mesh: each element must list exactly 6 node ids");
    }
    std::array<std::int64_t, 6> ids{};
    for (int k = 0; k < 6; ++k) {
      if (!conn[k].is_number_integer()) {
        throw InputError("mesh: element node ids must be integers");
      }
      ids[k] = conn[k].get<std::int64_t>();
      if (!seen.count(ids[k])) {
        throw InputError("mesh: element " +
                         std::to_string(mesh.elements.size()) +
                         " references unknown node id " + std::to_string(ids[k]));
      }
    }
    mesh.elements.push_back(ids);
  }
  if (mesh.elements.empty()) throw InputError("mesh: no elements");

  for (std::size_t i = 0; i < mesh.elements.size(); ++i) {
    const WedgeElement e = mesh.element(i);
    if (const auto bad = first_nonpositive_metric_sample(e)) {
      const NaturalPoint& p = metric_sample_points()[*bad];
      std::ostringstream os;
      os << "element " << i << ": non-positive metric at sample point "
         << *bad + 1 << " (xi=" << p.xi << ", eta=" << p.eta
         << ", zeta=" << p.zeta << ")";
      if (strict) throw ValidationError(os.str());
      if (warnings) warnings->push_back(os.str());
    }
  }
  return mesh;
}

Mesh parse_mesh_file(const std::string& path, bool strict,
                     std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("mesh: cannot open file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("mesh: malformed JSON in " + path + ": " + e.what());
  }
  return parse_mesh(doc, strict, warnings);
}

double GlobalMassMatrix::total() const {
  double sum = 0.0;
  for (const Triplet& t : triplets) {
    sum += (t.row == t.col) ? t.value : 2.0 * t.value;
  }
  return sum;
}

GlobalMassMatrix assemble_global(const Mesh& mesh, Scheme scheme,
                                 MatrixKind kind) {
  const auto lookup = node_index(mesh);
  std::map<std::pair<std::size_t, std::size_t>, double> acc;

  for (std::size_t idx = 0; idx < mesh.elements.size(); ++idx) {
    std::array<std::size_t, 6> dof{};
    WedgeElement e;
    e.density = mesh.density;
    for (int k = 0; k < 6; ++k) {
      const auto it = lookup.find(mesh.elements[idx][k]);
      if (it == lookup.end()) {
        throw InputError("mesh: element " + std::to_string(idx) +
                         " references unknown node id " +
                         std::to_string(mesh.elements[idx][k]));
      }
      dof[k] = it->second;
      e.nodes[k] = mesh.nodes[it->second].coords;
    }

    if (kind == MatrixKind::consistent) {
      const MassMatrix m = consistent_mass(e, scheme);
      for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) {
          const std::size_t row = std::min(dof[i], dof[j]);
          const std::size_t col = std::max(dof[i], dof[j]);
          acc[{row, col}] += m(i, j);
        }
      }
    } else {
      const LumpedMass m = lumped_mass(e, scheme);
      for (int i = 0; i < 6; ++i) acc[{dof[i], dof[i]}] += m[i];
    }
  }

  GlobalMassMatrix g;
  g.size = mesh.nodes.size();
  g.triplets.reserve(acc.size());
  for (const auto& [key, value] : acc) {
    g.triplets.push_back({key.first, key.second, value});
  }
  return g;
}

std::string global_coo_csv(const GlobalMassMatrix& g) {
  std::string out = "row,col,value\n";
  for (const auto& t : g.triplets) {
    out += std::to_string(t.row);
    out += ",";
    out += std::to_string(t.col);
    out += ",";
    out += format_double(t.value);
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json global_json(const GlobalMassMatrix& g, const Mesh& mesh) {
  nlohmann::ordered_json doc;
  doc["size"] = g.size;
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& n : mesh.nodes) ids.push_back(n.id);
  doc["node_ids"] = std::move(ids);
  nlohmann::ordered_json triplets = nlohmann::ordered_json::array();
  for (const auto& t : g.triplets) {
    triplets.push_back(nlohmann::ordered_json::array({t.row, t.col, t.value}));
  }
  doc["triplets"] = std::move(triplets);
  return doc;
}

}  // namespace wedgemass
