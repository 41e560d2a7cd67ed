#include "wedgemass/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "wedgemass/exact_oracle.hpp"
#include "wedgemass/mass_kernels.hpp"

namespace wedgemass {

WedgeElement coarse_element(double delta) {
  if (delta < 0.0) throw std::invalid_argument("coarse_element: delta must be >= 0");
  WedgeElement e;
  e.nodes = {{
      {0.0, 0.0, -1.0},
      {1.0, 0.0, -1.0},
      {0.0, 1.0, -1.0},
      {0.0, 0.0, 1.0 + delta},
      {1.0 + delta, 0.0, 1.0},
      {0.0, 1.0 + delta, 1.0},
  }};
  e.density = 1.0;
  return e;
}

double averaged_abs_error(const MassMatrix& approx, const MassMatrix& exact) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) sum += std::abs(approx(i, j) - exact(i, j));
  }
  return sum / 36.0;
}

double averaged_abs_error(const LumpedMass& approx, const LumpedMass& exact) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) sum += std::abs(approx[i] - exact[i]);
  return sum / 6.0;
}

std::vector<double> delta_grid(double min, double max, double step) {
  if (step <= 0.0) throw std::invalid_argument("delta_grid: step must be > 0");
  if (max < min) throw std::invalid_argument("delta_grid: max < min");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double d = min + i * step;
    if (d > max + step * 1e-9) break;
    grid.push_back(d);
  }
  return grid;
}

std::vector<StudyRecord> run_study(std::vector<double> deltas,
                                   const std::vector<Scheme>& schemes,
                                   MatrixKind kind) {
  if (deltas.empty()) throw std::invalid_argument("run_study: empty delta grid");
  std::sort(deltas.begin(), deltas.end());

  std::vector<StudyRecord> records;
  records.reserve(deltas.size());
  for (double delta : deltas) {
    const WedgeElement e = coarse_element(delta);
    StudyRecord row;
    row.delta = delta;
    row.errors.reserve(schemes.size());
    row.eval_counts.reserve(schemes.size());
    if (kind == MatrixKind::consistent) {
      const MassMatrix exact = exact_consistent(e);
      for (Scheme s : schemes) {
        row.errors.push_back(averaged_abs_error(consistent_mass(e, s), exact));
        row.eval_counts.push_back(metric_eval_count(s));
      }
    } else {
      const LumpedMass exact = exact_lumped(e);
      for (Scheme s : schemes) {
        row.errors.push_back(averaged_abs_error(lumped_mass(e, s), exact));
        row.eval_counts.push_back(metric_eval_count(s));
      }
    }
    records.push_back(std::move(row));
  }
  return records;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string study_csv(const std::vector<Scheme>& schemes,
                      const std::vector<StudyRecord>& records) {
  std::string out = "delta";
  for (Scheme s : schemes) {
    out += ",err_";
    out += scheme_name(s);
  }
  for (Scheme s : schemes) {
    out += ",evals_";
    out += scheme_name(s);
  }
  out += "\n";
  for (const StudyRecord& row : records) {
    out += format_double(row.delta);
    for (double err : row.errors) {
      out += ",";
      out += format_double(err);
    }
    for (int n : row.eval_counts) {
      out += ",";
      out += std::to_string(n);
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json study_json(const std::vector<Scheme>& schemes,
                                  const std::vector<StudyRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const StudyRecord& row : records) {
    nlohmann::ordered_json obj;
    obj["delta"] = row.delta;
    for (std::size_t k = 0; k < schemes.size(); ++k) {
      obj["err_" + std::string(scheme_name(schemes[k]))] = row.errors[k];
    }
    for (std::size_t k = 0; k < schemes.size(); ++k) {
      obj["evals_" + std::string(scheme_name(schemes[k]))] = row.eval_counts[k];
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace wedgemass
