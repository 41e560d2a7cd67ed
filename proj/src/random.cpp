#include "wedgemass/random.hpp"

#include <stdexcept>

namespace wedgemass {

WedgeElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> map(-0.35, 0.35);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  std::uniform_real_distribution<double> rho(0.5, 2.0);

  Mat3 a{};
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) a[m][n] = (m == n ? 1.0 : 0.0) + map(rng);
  }
  Vec3 t{shift(rng), shift(rng), shift(rng)};

  WedgeElement e;
  for (int i = 0; i < 6; ++i) {
    const NaturalPoint& p = natural_nodes()[i];
    const Vec3 nat{p.xi, p.eta, p.zeta};
    for (int m = 0; m < 3; ++m) {
      double x = t[m];
      for (int n = 0; n < 3; ++n) x += a[m][n] * nat[n];
      e.nodes[i][m] = x + jitter(rng);
    }
  }
  e.density = rho(rng);
  return e;
}

WedgeElement random_valid_element(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    WedgeElement e = random_element(rng);
    if (valid_metric(e)) return e;
  }
  throw std::runtime_error("random_valid_element: rejection sampling stalled");
}

}  // namespace wedgemass
