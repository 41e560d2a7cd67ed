#include "wedgemass/mass_matrix.hpp"

#include <cmath>

namespace wedgemass {

double MassMatrix::max_abs() const {
  double v = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) v = std::max(v, std::abs(m[i][j]));
  return v;
}

double LumpedMass::max_abs() const {
  double v = 0.0;
  for (double x : m) v = std::max(v, std::abs(x));
  return v;
}

bool is_positive_definite(const MassMatrix& mass, double* min_pivot) {
  std::array<std::array<double, 6>, 6> l{};
  double smallest = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = mass(i, j);
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (i == 0 || s < smallest) smallest = s;
        if (s <= 0.0) {
          if (min_pivot) *min_pivot = s;
          return false;
        }
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  if (min_pivot) *min_pivot = smallest;
  return true;
}

}  // namespace wedgemass
