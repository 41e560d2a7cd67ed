#include "wedgemass/metric_interp.hpp"

#include <stdexcept>

namespace wedgemass {

const std::array<NaturalPoint, 4>& lm_sample_points() {
  static const std::array<NaturalPoint, 4> points = {{
      {1.0 / 12.0, 1.0 / 12.0, -0.25},
      {13.0 / 12.0, 1.0 / 12.0, -0.25},
      {1.0 / 12.0, 13.0 / 12.0, -0.25},
      {1.0 / 12.0, 1.0 / 12.0, +0.75},
  }};
  return points;
}

const std::array<NaturalPoint, 7>& ex_sample_points() {
  return metric_sample_points();
}

std::array<double, 7> ex_coefficients(const NaturalPoint& p) {
  const Vec6 phi = shape_values(p);
  const double bubble = 1.0 - p.zeta * p.zeta;
  std::array<double, 7> c{};
  for (int k = 0; k < 6; ++k) c[k] = phi[k] - bubble / 6.0;
  c[6] = bubble;
  return c;
}

MetricSamples sample_cm(const WedgeElement& e) {
  return {Scheme::cm, {metric(e, reference_centroid())}};
}

MetricSamples sample_lm(const WedgeElement& e) {
  MetricSamples s{Scheme::lm, {}};
  s.values.reserve(4);
  for (const NaturalPoint& p : lm_sample_points()) s.values.push_back(metric(e, p));
  return s;
}

MetricSamples sample_ex(const WedgeElement& e) {
  MetricSamples s{Scheme::ex, {}};
  s.values.reserve(7);
  for (const NaturalPoint& p : ex_sample_points()) s.values.push_back(metric(e, p));
  return s;
}

double evaluate_interpolant(const MetricSamples& s, const NaturalPoint& p) {
  const double xi = p.xi;
  const double eta = p.eta;
  const double zeta = p.zeta;
  switch (s.scheme) {
    case Scheme::cm:
      if (s.values.size() != 1) throw std::invalid_argument("cm samples: expected 1 value");
      return s.values[0];
    case Scheme::lm: {
      if (s.values.size() != 4) throw std::invalid_argument("lm samples: expected 4 values");
      return (11.0 / 12.0 - xi - eta - zeta) * s.values[0] +
             (-1.0 / 12.0 + xi) * s.values[1] +
             (-1.0 / 12.0 + eta) * s.values[2] +
             (0.25 + zeta) * s.values[3];
    }
    case Scheme::ex: {
      if (s.values.size() != 7) throw std::invalid_argument("ex samples: expected 7 values");
      const std::array<double, 7> c = ex_coefficients(p);
      double v = 0.0;
      for (int k = 0; k < 7; ++k) v += c[k] * s.values[k];
      return v;
    }
    default:
      throw std::invalid_argument("evaluate_interpolant: not an interpolation scheme");
  }
}

}  // namespace wedgemass
