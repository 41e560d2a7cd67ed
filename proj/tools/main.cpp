#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wedgemass/errors.hpp"
#include "wedgemass/exact_oracle.hpp"
#include "wedgemass/mass_kernels.hpp"
#include "wedgemass/mesh.hpp"
#include "wedgemass/random.hpp"
#include "wedgemass/study.hpp"
#include "wedgemass/table_regen.hpp"

namespace {

using namespace wedgemass;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Scheme parse_scheme(const std::string& name) {
  if (auto s = scheme_from_name(name)) return *s;
  throw InputError("unknown scheme '" + name +
                   "' (expected cm, lm, ex, gauss2, gauss9 or reference)");
}

MatrixKind parse_kind(const std::string& name) {
  if (name == "consistent") return MatrixKind::consistent;
  if (name == "lumped") return MatrixKind::lumped;
  throw InputError("unknown matrix kind '" + name +
                   "' (expected consistent or lumped)");
}

// --element accepts either a path to a JSON file or 18 inline coordinates
// (x,y,z per node, nodes in canonical order), separated by commas or spaces.
WedgeElement parse_element_spec(const std::string& spec, double density) {
  std::string cleaned = spec;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream is(cleaned);
  std::vector<double> values;
  double v;
  while (is >> v) values.push_back(v);
  WedgeElement e;
  e.density = density;
  if (is.eof() && values.size() == 18) {
    for (int i = 0; i < 6; ++i) {
      e.nodes[i] = {values[3 * i], values[3 * i + 1], values[3 * i + 2]};
    }
    return e;
  }

  std::ifstream in(spec);
  if (!in) {
    throw InputError("--element: '" + spec +
                     "' is neither 18 numbers nor a readable file");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("--element: malformed JSON in " + spec + ": " + ex.what());
  }
  const nlohmann::json* nodes = &doc;
  if (doc.is_object()) {
    if (!doc.contains("nodes")) throw InputError("--element: missing \"nodes\"");
    nodes = &doc["nodes"];
    if (doc.contains("density")) e.density = doc["density"].get<double>();
  }
  if (nodes->is_array() && nodes->size() == 18) {
    for (int i = 0; i < 6; ++i) {
      for (int m = 0; m < 3; ++m) {
        e.nodes[i][m] = (*nodes)[3 * i + m].get<double>();
      }
    }
    return e;
  }
  if (nodes->is_array() && nodes->size() == 6) {
    for (int i = 0; i < 6; ++i) {
      const auto& row = (*nodes)[i];
      if (!row.is_array() || row.size() != 3) {
        throw InputError("--element: node " + std::to_string(i + 1) +
                         " must be an [x, y, z] array");
      }
      for (int m = 0; m < 3; ++m) e.nodes[i][m] = row[m].get<double>();
    }
    return e;
  }
  throw InputError("--element: expected 18 numbers or 6 [x, y, z] nodes");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file " + out_path);
  out << text;
}

int run_compute(const std::string& element_spec, double density,
                const std::string& scheme_name, const std::string& kind_name,
                const std::string& format) {
  const WedgeElement e = parse_element_spec(element_spec, density);
  const Scheme scheme = parse_scheme(scheme_name);
  const MatrixKind kind = parse_kind(kind_name);

  if (format == "csv") {
    std::string out;
    if (kind == MatrixKind::consistent) {
      const MassMatrix m = consistent_mass(e, scheme);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          out += format_double(m(i, j));
          out += (j < 5) ? "," : "\n";
        }
      }
    } else {
      const LumpedMass m = lumped_mass(e, scheme);
      for (int i = 0; i < 6; ++i) {
        out += format_double(m[i]);
        out += (i < 5) ? "," : "\n";
      }
    }
    std::cout << out;
    return kExitOk;
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["scheme"] = scheme_name;
    doc["kind"] = kind_name;
    doc["density"] = e.density;
    if (kind == MatrixKind::consistent) {
      const MassMatrix m = consistent_mass(e, scheme);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 0; i < 6; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < 6; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
      }
      doc["matrix"] = std::move(rows);
      doc["total_mass"] = m.total();
    } else {
      const LumpedMass m = lumped_mass(e, scheme);
      doc["values"] = m.m;
      doc["total_mass"] = m.total();
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  throw InputError("unknown format '" + format + "' (expected csv or json)");
}

int run_study_cmd(double delta_min, double delta_max, double delta_step,
                  const std::string& schemes_arg, const std::string& kind_name,
                  const std::string& format, const std::string& out_path) {
  std::vector<Scheme> schemes;
  std::stringstream ss(schemes_arg);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) schemes.push_back(parse_scheme(token));
  }
  if (schemes.empty()) throw InputError("--schemes: empty scheme list");
  if (delta_min < 0.0) throw InputError("--delta-min must be >= 0");

  const MatrixKind kind = parse_kind(kind_name);
  const auto records =
      run_study(delta_grid(delta_min, delta_max, delta_step), schemes, kind);

  if (format == "csv") {
    write_output(study_csv(schemes, records), out_path);
    return kExitOk;
  }
  if (format == "json") {
    write_output(study_json(schemes, records).dump(2) + "\n", out_path);
    return kExitOk;
  }
  throw InputError("unknown format '" + format + "' (expected csv or json)");
}

int run_assemble(const std::string& mesh_path, const std::string& scheme_name,
                 const std::string& kind_name, const std::string& format,
                 bool strict) {
  std::vector<std::string> warnings;
  const Mesh mesh = parse_mesh_file(mesh_path, strict, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  const GlobalMassMatrix g =
      assemble_global(mesh, parse_scheme(scheme_name), parse_kind(kind_name));
  if (format == "coo-csv") {
    std::cout << global_coo_csv(g);
    return kExitOk;
  }
  if (format == "json") {
    std::cout << global_json(g, mesh).dump(2) << "\n";
    return kExitOk;
  }
  throw InputError("unknown format '" + format +
                   "' (expected coo-csv or json)");
}

int run_verify(std::uint64_t seed, int count) {
  std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
  bool ok = true;

  const auto mismatches = regenerate_coefficient_tables();
  if (mismatches.empty()) {
    std::printf(
        "coefficient tables: OK (cm, lm, ex and legacy ex regenerate exactly "
        "as integers)\n");
  } else {
    ok = false;
    std::printf("coefficient tables: %zu mismatches\n", mismatches.size());
    for (const auto& m : mismatches) {
      std::printf("  %s\n", m.describe().c_str());
    }
  }

  std::mt19937_64 rng(seed);
  double worst_consistent = 0.0;
  double worst_lumped = 0.0;
  for (int k = 0; k < count; ++k) {
    const WedgeElement e = random_valid_element(rng);
    const MassMatrix ex = consistent_ex(e);
    const MassMatrix oracle = exact_consistent(e);
    const LumpedMass ex_l = lumped_ex(e);
    const LumpedMass oracle_l = exact_lumped(e);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        worst_consistent =
            std::max(worst_consistent,
                     std::abs(ex(i, j) - oracle(i, j)) / oracle.max_abs());
      }
      worst_lumped = std::max(
          worst_lumped, std::abs(ex_l[i] - oracle_l[i]) / oracle_l.max_abs());
    }
  }
  const double tol = 1e-12;
  std::printf("ex vs analytic oracle (consistent, %d elements): %.3e %s\n",
              count, worst_consistent, worst_consistent <= tol ? "OK" : "FAIL");
  std::printf("ex vs analytic oracle (lumped, %d elements): %.3e %s\n", count,
              worst_lumped, worst_lumped <= tol ? "OK" : "FAIL");
  ok = ok && worst_consistent <= tol && worst_lumped <= tol;

  std::printf("verify: %s\n", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mass matrices for the six-node solid wedge element: closed-form "
      "cm/lm/ex rules, Gauss quadrature, an exact analytic oracle, a "
      "coarse-mesh accuracy study and global assembly."};
  app.require_subcommand(1);

  std::string element_spec;
  std::string scheme_name = "ex";
  std::string kind_name = "consistent";
  std::string format = "csv";
  double density = 1.0;
  auto* compute = app.add_subcommand("compute", "Element mass matrix");
  compute->add_option("--element", element_spec,
                      "Element file or 18 inline coordinates")
      ->required();
  compute->add_option("--scheme", scheme_name,
                      "cm|lm|ex|gauss2|gauss9|reference");
  compute->add_option("--kind", kind_name, "consistent|lumped");
  compute->add_option("--density", density, "Density (inline elements)");
  compute->add_option("--format", format, "csv|json");

  double delta_min = 0.0;
  double delta_max = 2.0;
  double delta_step = 0.05;
  std::string schemes_arg = "cm,lm,ex,gauss2,gauss9";
  std::string study_kind = "consistent";
  std::string study_format = "csv";
  std::string out_path;
  auto* study = app.add_subcommand("study", "Coarse-mesh accuracy study");
  study->add_option("--delta-min", delta_min, "Smallest coarseness");
  study->add_option("--delta-max", delta_max, "Largest coarseness");
  study->add_option("--delta-step", delta_step, "Grid step");
  study->add_option("--schemes", schemes_arg, "Comma-separated scheme list");
  study->add_option("--kind", study_kind, "consistent|lumped");
  study->add_option("--format", study_format, "csv|json");
  study->add_option("--out", out_path, "Write to file instead of stdout");

  std::string mesh_path;
  std::string asm_scheme = "ex";
  std::string asm_kind = "consistent";
  std::string asm_format = "coo-csv";
  bool strict = false;
  auto* assemble = app.add_subcommand("assemble", "Global mass matrix");
  assemble->add_option("--mesh", mesh_path, "Mesh JSON file")->required();
  assemble->add_option("--scheme", asm_scheme,
                       "cm|lm|ex|gauss2|gauss9|reference");
  assemble->add_option("--kind", asm_kind, "consistent|lumped");
  assemble->add_option("--format", asm_format, "coo-csv|json");
  assemble->add_flag("--strict", strict, "Fail on invalid elements");

  std::uint64_t seed = 0;
  int count = 100;
  auto* verify = app.add_subcommand(
      "verify",
      "Regenerate coefficient tables and check ex against the oracle");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--count", count, "Number of random elements");

  try {
    app.parse(argc, argv);
    if (compute->parsed()) {
      return run_compute(element_spec, density, scheme_name, kind_name, format);
    }
    if (study->parsed()) {
      return run_study_cmd(delta_min, delta_max, delta_step, schemes_arg,
                           study_kind, study_format, out_path);
    }
    if (assemble->parsed()) {
      return run_assemble(mesh_path, asm_scheme, asm_kind, asm_format, strict);
    }
    if (verify->parsed()) {
      return run_verify(seed, count);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
