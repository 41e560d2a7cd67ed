#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wedgemass/element.hpp"
#include "wedgemass/mass_matrix.hpp"
#include "wedgemass/scheme.hpp"

namespace wedgemass {

/// Coarse element family driven by a single coarseness parameter: at
/// delta = 0 the triangular faces are parallel and the metric is constant;
/// growing delta raises node 4 and stretches nodes 5 and 6 outward, bending
/// the metric away from constant. Density is 1. Throws std::invalid_argument
/// for delta < 0.
WedgeElement coarse_element(double delta);

/// Mean absolute componentwise deviation (36 components for consistent
/// matrices, 6 for lumped).
double averaged_abs_error(const MassMatrix& approx, const MassMatrix& exact);
double averaged_abs_error(const LumpedMass& approx, const LumpedMass& exact);

/// One row of the accuracy study: per-scheme averaged absolute error
/// against the exact matrix, plus each scheme's metric-evaluation cost.
/// errors and eval_counts are parallel to the scheme list the study ran.
struct StudyRecord {
  double delta = 0.0;
  std::vector<double> errors;
  std::vector<int> eval_counts;
};

/// Inclusive grid min, min+step, ... capped at max (step > 0).
std::vector<double> delta_grid(double min, double max, double step);

/// Runs the accuracy study over the grid: for each delta builds the coarse
/// element, computes each scheme's matrix and the exact one, and records
/// averaged errors. Rows are ordered by delta ascending, schemes in the
/// order given. Fully deterministic.
std::vector<StudyRecord> run_study(std::vector<double> deltas,
                                   const std::vector<Scheme>& schemes,
                                   MatrixKind kind);

/// CSV with header: delta, one err_<scheme> column per scheme, then one
/// evals_<scheme> column per scheme. Values are round-trippable doubles.
std::string study_csv(const std::vector<Scheme>& schemes,
                      const std::vector<StudyRecord>& records);

/// JSON array of objects with the same fields in the same order.
nlohmann::ordered_json study_json(const std::vector<Scheme>& schemes,
                                  const std::vector<StudyRecord>& records);

}  // namespace wedgemass
