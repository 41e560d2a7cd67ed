#pragma once

#include <vector>

#include "wedgemass/element.hpp"
#include "wedgemass/mass_matrix.hpp"
#include "wedgemass/metric_interp.hpp"
#include "wedgemass/scheme.hpp"

namespace wedgemass {

/// Closed-form rules: sampled metric values weighted by the precomputed
/// integer coefficient tables. cm costs one metric evaluation, lm four,
/// ex seven; the ex rule is exact for every straight-edged wedge.
MassMatrix consistent_cm(const WedgeElement& e);
MassMatrix consistent_lm(const WedgeElement& e);
MassMatrix consistent_ex(const WedgeElement& e);
LumpedMass lumped_cm(const WedgeElement& e);
LumpedMass lumped_lm(const WedgeElement& e);
LumpedMass lumped_ex(const WedgeElement& e);

/// Quadrature over the reference wedge (triangle rule x line rule).
/// Weights are positive and sum to the reference volume 1.
struct QuadratureRule {
  std::vector<NaturalPoint> points;
  std::vector<double> weights;
};

/// Rules for gauss2, gauss9 and reference; throws std::invalid_argument
/// for the interpolation schemes.
QuadratureRule gauss_rule(Scheme id);

MassMatrix consistent_quadrature(const WedgeElement& e, const QuadratureRule& rule);
LumpedMass lumped_quadrature(const WedgeElement& e, const QuadratureRule& rule);

/// Dispatch by scheme id: closed-form for cm/lm/ex, weighted sums for the
/// quadrature schemes.
MassMatrix consistent_mass(const WedgeElement& e, Scheme s);
LumpedMass lumped_mass(const WedgeElement& e, Scheme s);

}  // namespace wedgemass
