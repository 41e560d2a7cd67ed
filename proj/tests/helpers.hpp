#pragma once

#include <cmath>
#include <random>

#include "wedgemass/element.hpp"
#include "wedgemass/mass_matrix.hpp"

namespace wedgemass::testing {

inline NaturalPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> tri(-0.5, 1.5);
  std::uniform_real_distribution<double> line(-1.5, 1.5);
  return {tri(rng), tri(rng), line(rng)};
}

/// Element whose nodal map is exactly affine (random linear map plus shift,
/// no jitter), so the metric is the constant det of the map.
inline WedgeElement random_affine_element(std::mt19937_64& rng,
                                          double* map_det = nullptr) {
  std::uniform_real_distribution<double> entry(-0.4, 0.4);
  std::uniform_real_distribution<double> shift(-1.0, 1.0);
  Mat3 a{};
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) a[m][n] = (m == n ? 1.0 : 0.0) + entry(rng);
  }
  WedgeElement e;
  for (int i = 0; i < 6; ++i) {
    const NaturalPoint& p = natural_nodes()[i];
    const Vec3 nat{p.xi, p.eta, p.zeta};
    for (int m = 0; m < 3; ++m) {
      double x = 0.0;
      for (int n = 0; n < 3; ++n) x += a[m][n] * nat[n];
      e.nodes[i][m] = x;
    }
  }
  const Vec3 t{shift(rng), shift(rng), shift(rng)};
  for (int i = 0; i < 6; ++i) {
    for (int m = 0; m < 3; ++m) e.nodes[i][m] += t[m];
  }
  if (map_det) *map_det = det3(a);
  return e;
}

inline double max_abs_diff(const MassMatrix& a, const MassMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

inline double max_abs_diff(const LumpedMass& a, const LumpedMass& b) {
  double d = 0.0;
  for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace wedgemass::testing
