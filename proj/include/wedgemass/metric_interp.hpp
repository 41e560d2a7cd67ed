#pragma once

#include <vector>

#include "wedgemass/element.hpp"
#include "wedgemass/scheme.hpp"

namespace wedgemass {

/// Metric values sampled for one of the interpolating schemes:
/// cm holds one value (the centroid metric), lm four, ex seven.
struct MetricSamples {
  Scheme scheme = Scheme::cm;
  std::vector<double> values;
};

/// Sample points of the linear (lm) interpolation. Two of the four lie
/// outside the reference domain; the metric is a polynomial, so sampling
/// there is legal.
const std::array<NaturalPoint, 4>& lm_sample_points();

/// Sample points of the exact (ex) interpolation: the six nodal positions
/// followed by the centroid.
const std::array<NaturalPoint, 7>& ex_sample_points();

/// Coefficient functions of the exact seven-point interpolation at p:
/// phi_k - (1 - zeta^2)/6 for the six nodes, 1 - zeta^2 for the centroid.
/// These are the cardinal functions of the stencil on the metric's monomial
/// space {1, xi, eta, zeta, xi*zeta, eta*zeta, zeta^2}, hence the unique
/// seven-point combination that reproduces the metric identically.
std::array<double, 7> ex_coefficients(const NaturalPoint& p);

/// Constant metric: one evaluation at the centroid.
MetricSamples sample_cm(const WedgeElement& e);

/// Linear metric: four evaluations at lm_sample_points().
MetricSamples sample_lm(const WedgeElement& e);

/// Exact metric: seven evaluations at ex_sample_points().
MetricSamples sample_ex(const WedgeElement& e);

/// Evaluates the scheme's interpolant at p. cm returns the constant; lm is
/// an affine combination that reproduces any affine metric; ex reproduces
/// the full seven-term metric polynomial identically.
double evaluate_interpolant(const MetricSamples& s, const NaturalPoint& p);

}  // namespace wedgemass
