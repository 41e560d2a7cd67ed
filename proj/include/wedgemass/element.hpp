#pragma once

#include <array>
#include <cstddef>
#include <optional>

namespace wedgemass {

using Vec3 = std::array<double, 3>;
using Vec6 = std::array<double, 6>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Point in the natural coordinates (xi, eta, zeta) of the reference wedge:
/// the unit triangle {xi >= 0, eta >= 0, xi + eta <= 1} extruded over
/// zeta in [-1, +1]. Points may lie outside this domain; shape functions
/// and the jacobian are polynomials defined everywhere, and some sampling
/// stencils deliberately use exterior points.
struct NaturalPoint {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 0.0;

  bool inside_reference() const {
    return xi >= 0.0 && eta >= 0.0 && xi <= 1.0 - eta && zeta >= -1.0 &&
           zeta <= 1.0;
  }
};

/// Six-node solid wedge (triangular prism) with homogeneous density.
/// Nodes 0-2 sit on the zeta = -1 triangular face at natural positions
/// (0,0), (1,0), (0,1); nodes 3-5 sit above them on zeta = +1.
struct WedgeElement {
  std::array<Vec3, 6> nodes{};
  double density = 1.0;
};

/// Natural coordinates of the six nodes, in storage order.
const std::array<NaturalPoint, 6>& natural_nodes();

/// Centroid of the reference wedge, (1/3, 1/3, 0).
NaturalPoint reference_centroid();

/// The six nodal positions followed by the centroid. The metric of a
/// six-node wedge is a seven-term polynomial, so its values at these seven
/// points determine it everywhere; they also serve as the validity probe.
const std::array<NaturalPoint, 7>& metric_sample_points();

/// Shape function values (phi_1 .. phi_6) at p. Partition of unity holds
/// at every point, Kronecker property at the nodal positions.
Vec6 shape_values(const NaturalPoint& p);

/// Gradients of the six shape functions with respect to (xi, eta, zeta).
std::array<Vec3, 6> shape_gradients(const NaturalPoint& p);

/// 3x3 determinant expanded along the first column, the fixed expansion
/// used by every metric evaluation in this library.
double det3(const Mat3& m);

/// Jacobian of the isoparametric map at p; entry (m, n) = dX_m / dxi_n.
Mat3 jacobian_matrix(const WedgeElement& e, const NaturalPoint& p);

/// Metric (jacobian determinant) at p.
double metric(const WedgeElement& e, const NaturalPoint& p);

/// Coefficient matrices of the jacobian, which is affine per entry:
/// J(xi, eta, zeta) = constant + xi * d_xi + eta * d_eta + zeta * d_zeta.
struct JacobianDecomposition {
  Mat3 constant{};
  Mat3 d_xi{};
  Mat3 d_eta{};
  Mat3 d_zeta{};

  Mat3 at(const NaturalPoint& p) const;
};

/// Derives the four coefficient matrices from the shape-function gradients
/// (evaluations at four probe points; exact, the entries are affine).
JacobianDecomposition decompose_jacobian(const WedgeElement& e);

/// The metric of a six-node wedge collapses to seven monomials:
///   J = c0 + c1*xi + c2*eta + c3*zeta + c4*xi*zeta + c5*eta*zeta + c6*zeta^2.
struct MetricPoly {
  std::array<double, 7> c{};

  double operator()(const NaturalPoint& p) const {
    return c[0] + c[1] * p.xi + c[2] * p.eta + c[3] * p.zeta +
           c[4] * p.xi * p.zeta + c[5] * p.eta * p.zeta +
           c[6] * p.zeta * p.zeta;
  }

  /// Exact integral over the reference wedge. The odd zeta moments vanish
  /// and the xi, eta and zeta^2 moments all equal 1/3.
  double integral() const { return c[0] + (c[1] + c[2] + c[6]) / 3.0; }
};

/// Expands the jacobian determinant symbolically and collects the seven
/// monomial coefficients; every other monomial cancels identically (checked
/// to 1e-13 of the dominant coefficient scale).
MetricPoly metric_poly(const WedgeElement& e);

/// True when the metric is strictly positive at all seven sample points.
bool valid_metric(const WedgeElement& e);

/// Index (0..6) into metric_sample_points() of the first sample with a
/// non-positive metric, or nullopt for a valid element.
std::optional<std::size_t> first_nonpositive_metric_sample(
    const WedgeElement& e);

}  // namespace wedgemass
