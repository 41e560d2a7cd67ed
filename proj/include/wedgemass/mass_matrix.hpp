#pragma once

#include <array>

namespace wedgemass {

enum class MatrixKind { consistent, lumped };

/// Symmetric 6x6 consistent mass matrix (scalar-valued; one entry per node
/// pair, identical for each coordinate direction).
struct MassMatrix {
  std::array<std::array<double, 6>, 6> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  double row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < 6; ++j) s += m[i][j];
    return s;
  }

  /// Sum of all 36 entries: the total element mass.
  double total() const {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += row_sum(i);
    return s;
  }

  double max_abs() const;
};

/// Diagonal (lumped) mass matrix stored as its six diagonal entries.
struct LumpedMass {
  std::array<double, 6> m{};

  double& operator[](int i) { return m[i]; }
  double operator[](int i) const { return m[i]; }

  double total() const {
    double s = 0.0;
    for (double v : m) s += v;
    return s;
  }

  double max_abs() const;
};

/// Cholesky test for positive definiteness. When min_pivot is provided it
/// receives the smallest diagonal pivot (or the first non-positive one on
/// failure).
bool is_positive_definite(const MassMatrix& mass, double* min_pivot = nullptr);

}  // namespace wedgemass
