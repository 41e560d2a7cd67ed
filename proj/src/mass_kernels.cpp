#include "wedgemass/mass_kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wedgemass/coefficient_tables.hpp"

namespace wedgemass {

namespace {

MassMatrix weighted_tables(double scale, const double* sample_values,
                           const tables::Mat6i* matrices, int count) {
  MassMatrix mass;
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      double v = 0.0;
      for (int k = 0; k < count; ++k) {
        v += sample_values[k] * static_cast<double>(matrices[k][i][j]);
      }
      v *= scale;
      mass(i, j) = v;
      mass(j, i) = v;
    }
  }
  return mass;
}

LumpedMass weighted_vectors(double scale, const double* sample_values,
                            const tables::Vec6i* vectors, int count) {
  LumpedMass lumped;
  for (int i = 0; i < 6; ++i) {
    double v = 0.0;
    for (int k = 0; k < count; ++k) {
      v += sample_values[k] * static_cast<double>(vectors[k][i]);
    }
    lumped[i] = v * scale;
  }
  return lumped;
}

}  // namespace

MassMatrix consistent_cm(const WedgeElement& e) {
  const MetricSamples s = sample_cm(e);
  const double scale = e.density * s.values[0] / tables::kCmDivisor;
  MassMatrix mass;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      mass(i, j) = scale * static_cast<double>(tables::kCmConsistent[i][j]);
    }
  }
  return mass;
}

LumpedMass lumped_cm(const WedgeElement& e) {
  const MetricSamples s = sample_cm(e);
  LumpedMass lumped;
  for (int i = 0; i < 6; ++i) {
    lumped[i] = e.density * s.values[0] * tables::kCmLumped[i] /
                tables::kCmLumpedDivisor;
  }
  return lumped;
}

MassMatrix consistent_lm(const WedgeElement& e) {
  const MetricSamples s = sample_lm(e);
  return weighted_tables(e.density / tables::kLmDivisor, s.values.data(),
                         tables::kLmConsistent.data(), 4);
}

LumpedMass lumped_lm(const WedgeElement& e) {
  const MetricSamples s = sample_lm(e);
  return weighted_vectors(e.density / tables::kLmLumpedDivisor,
                          s.values.data(), tables::kLmLumped.data(), 4);
}

MassMatrix consistent_ex(const WedgeElement& e) {
  const MetricSamples s = sample_ex(e);
  return weighted_tables(e.density / tables::kExDivisor, s.values.data(),
                         tables::kExConsistent.data(), 7);
}

LumpedMass lumped_ex(const WedgeElement& e) {
  const MetricSamples s = sample_ex(e);
  return weighted_vectors(e.density / tables::kExLumpedDivisor,
                          s.values.data(), tables::kExLumped.data(), 7);
}

namespace {

struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;  // sum to 2, the length of [-1, +1]
};

struct TriangleRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;  // sum to 1/2, the unit-triangle area
};

QuadratureRule tensor_rule(const TriangleRule& tri, const LineRule& line) {
  QuadratureRule rule;
  for (std::size_t t = 0; t < tri.points.size(); ++t) {
    for (std::size_t l = 0; l < line.points.size(); ++l) {
      rule.points.push_back({tri.points[t][0], tri.points[t][1], line.points[l]});
      rule.weights.push_back(tri.weights[t] * line.weights[l]);
    }
  }
  return rule;
}

LineRule gauss_line(int n) {
  const double g3 = std::sqrt(0.6);
  switch (n) {
    case 2: {
      const double g2 = 1.0 / std::sqrt(3.0);
      return {{-g2, +g2}, {1.0, 1.0}};
    }
    case 3:
      return {{-g3, 0.0, +g3}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
    default:
      throw std::invalid_argument("gauss_line: unsupported point count");
  }
}

TriangleRule triangle_centroid() {
  return {{{1.0 / 3.0, 1.0 / 3.0}}, {0.5}};
}

TriangleRule triangle_3point() {
  return {{{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}},
          {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}};
}

// Seven-point rule exact through degree five: centroid plus two symmetric
// three-point orbits, all weights positive.
TriangleRule triangle_7point() {
  const double r15 = std::sqrt(15.0);
  const double a = (6.0 + r15) / 21.0;
  const double b = (6.0 - r15) / 21.0;
  const double wc = 9.0 / 80.0;                 // 9/40 scaled by the area 1/2
  const double wa = (155.0 + r15) / 2400.0;
  const double wb = (155.0 - r15) / 2400.0;
  TriangleRule tri;
  tri.points = {{1.0 / 3.0, 1.0 / 3.0},
                {a, a}, {1.0 - 2.0 * a, a}, {a, 1.0 - 2.0 * a},
                {b, b}, {1.0 - 2.0 * b, b}, {b, 1.0 - 2.0 * b}};
  tri.weights = {wc, wa, wa, wa, wb, wb, wb};
  return tri;
}

}  // namespace

QuadratureRule gauss_rule(Scheme id) {
  switch (id) {
    case Scheme::gauss2:
      return tensor_rule(triangle_centroid(), gauss_line(2));
    case Scheme::gauss9:
      return tensor_rule(triangle_3point(), gauss_line(3));
    case Scheme::reference:
      return tensor_rule(triangle_7point(), gauss_line(3));
    default:
      throw std::invalid_argument("gauss_rule: no quadrature for scheme '" +
                                  std::string(scheme_name(id)) + "'");
  }
}

MassMatrix consistent_quadrature(const WedgeElement& e, const QuadratureRule& rule) {
  if (rule.points.empty()) throw std::invalid_argument("empty quadrature rule");
  MassMatrix mass;
  for (std::size_t p = 0; p < rule.points.size(); ++p) {
    const Vec6 phi = shape_values(rule.points[p]);
    const double wj = rule.weights[p] * metric(e, rule.points[p]);
    for (int i = 0; i < 6; ++i) {
      for (int j = i; j < 6; ++j) {
        mass(i, j) += wj * phi[i] * phi[j];
      }
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      mass(i, j) *= e.density;
      mass(j, i) = mass(i, j);
    }
  }
  return mass;
}

LumpedMass lumped_quadrature(const WedgeElement& e, const QuadratureRule& rule) {
  if (rule.points.empty()) throw std::invalid_argument("empty quadrature rule");
  LumpedMass lumped;
  for (std::size_t p = 0; p < rule.points.size(); ++p) {
    const Vec6 phi = shape_values(rule.points[p]);
    const double wj = rule.weights[p] * metric(e, rule.points[p]);
    for (int i = 0; i < 6; ++i) lumped[i] += wj * phi[i];
  }
  for (int i = 0; i < 6; ++i) lumped[i] *= e.density;
  return lumped;
}

MassMatrix consistent_mass(const WedgeElement& e, Scheme s) {
  switch (s) {
    case Scheme::cm: return consistent_cm(e);
    case Scheme::lm: return consistent_lm(e);
    case Scheme::ex: return consistent_ex(e);
    default: return consistent_quadrature(e, gauss_rule(s));
  }
}

LumpedMass lumped_mass(const WedgeElement& e, Scheme s) {
  switch (s) {
    case Scheme::cm: return lumped_cm(e);
    case Scheme::lm: return lumped_lm(e);
    case Scheme::ex: return lumped_ex(e);
    default: return lumped_quadrature(e, gauss_rule(s));
  }
}

}  // namespace wedgemass
