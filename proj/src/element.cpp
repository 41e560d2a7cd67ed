#include "wedgemass/element.hpp"

#include <cassert>
#include <cmath>

namespace wedgemass {

const std::array<NaturalPoint, 6>& natural_nodes() {
  static const std::array<NaturalPoint, 6> nodes = {{
      {0.0, 0.0, -1.0},
      {1.0, 0.0, -1.0},
      {0.0, 1.0, -1.0},
      {0.0, 0.0, +1.0},
      {1.0, 0.0, +1.0},
      {0.0, 1.0, +1.0},
  }};
  return nodes;
}

NaturalPoint reference_centroid() { return {1.0 / 3.0, 1.0 / 3.0, 0.0}; }

const std::array<NaturalPoint, 7>& metric_sample_points() {
  static const std::array<NaturalPoint, 7> points = [] {
    std::array<NaturalPoint, 7> p{};
    for (std::size_t i = 0; i < 6; ++i) p[i] = natural_nodes()[i];
    p[6] = reference_centroid();
    return p;
  }();
  return points;
}

Vec6 shape_values(const NaturalPoint& p) {
  const double lam = 1.0 - p.xi - p.eta;
  const double lo = 0.5 * (1.0 - p.zeta);
  const double hi = 0.5 * (1.0 + p.zeta);
  return {lam * lo, p.xi * lo, p.eta * lo, lam * hi, p.xi * hi, p.eta * hi};
}

std::array<Vec3, 6> shape_gradients(const NaturalPoint& p) {
  const double lam = 1.0 - p.xi - p.eta;
  const double lo = 0.5 * (1.0 - p.zeta);
  const double hi = 0.5 * (1.0 + p.zeta);
  return {{
      {-lo, -lo, -0.5 * lam},
      {+lo, 0.0, -0.5 * p.xi},
      {0.0, +lo, -0.5 * p.eta},
      {-hi, -hi, +0.5 * lam},
      {+hi, 0.0, +0.5 * p.xi},
      {0.0, +hi, +0.5 * p.eta},
  }};
}

double det3(const Mat3& m) {
  return m[0][0] * m[1][1] * m[2][2] - m[0][0] * m[1][2] * m[2][1] -
         m[2][0] * m[1][1] * m[0][2] - m[1][0] * m[0][1] * m[2][2] +
         m[1][0] * m[2][1] * m[0][2] + m[2][0] * m[0][1] * m[1][2];
}

Mat3 jacobian_matrix(const WedgeElement& e, const NaturalPoint& p) {
  const auto grads = shape_gradients(p);
  Mat3 j{};
  for (int i = 0; i < 6; ++i) {
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        j[m][n] += e.nodes[i][m] * grads[i][n];
      }
    }
  }
  return j;
}

double metric(const WedgeElement& e, const NaturalPoint& p) {
  return det3(jacobian_matrix(e, p));
}

Mat3 JacobianDecomposition::at(const NaturalPoint& p) const {
  Mat3 j{};
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      j[m][n] = constant[m][n] + p.xi * d_xi[m][n] + p.eta * d_eta[m][n] +
                p.zeta * d_zeta[m][n];
    }
  }
  return j;
}

JacobianDecomposition decompose_jacobian(const WedgeElement& e) {
  // Each jacobian entry is affine in (xi, eta, zeta) with no cross terms,
  // so four evaluations recover the coefficient matrices exactly.
  const Mat3 at_origin = jacobian_matrix(e, {0.0, 0.0, 0.0});
  const Mat3 at_xi = jacobian_matrix(e, {1.0, 0.0, 0.0});
  const Mat3 at_eta = jacobian_matrix(e, {0.0, 1.0, 0.0});
  const Mat3 at_zeta = jacobian_matrix(e, {0.0, 0.0, 1.0});

  JacobianDecomposition d;
  d.constant = at_origin;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      d.d_xi[m][n] = at_xi[m][n] - at_origin[m][n];
      d.d_eta[m][n] = at_eta[m][n] - at_origin[m][n];
      d.d_zeta[m][n] = at_zeta[m][n] - at_origin[m][n];
    }
  }
  return d;
}

namespace {

// Dense trivariate polynomial with exponents up to 3 per variable; large
// enough for a product of three affine jacobian entries.
struct Poly3 {
  double c[4][4][4] = {};
};

Poly3 entry_poly(const JacobianDecomposition& d, int m, int n) {
  Poly3 p;
  p.c[0][0][0] = d.constant[m][n];
  p.c[1][0][0] = d.d_xi[m][n];
  p.c[0][1][0] = d.d_eta[m][n];
  p.c[0][0][1] = d.d_zeta[m][n];
  return p;
}

Poly3 mul(const Poly3& x, const Poly3& y) {
  Poly3 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        if (x.c[a][b][c] == 0.0) continue;
        for (int d = 0; a + d < 4; ++d)
          for (int e = 0; b + e < 4; ++e)
            for (int f = 0; c + f < 4; ++f) {
              if (y.c[d][e][f] == 0.0) continue;
              r.c[a + d][b + e][c + f] += x.c[a][b][c] * y.c[d][e][f];
            }
      }
  return r;
}

void accumulate(Poly3& acc, double sign, const Poly3& x, const Poly3& y,
                const Poly3& z) {
  const Poly3 p = mul(mul(x, y), z);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) acc.c[a][b][c] += sign * p.c[a][b][c];
}

}  // namespace

MetricPoly metric_poly(const WedgeElement& e) {
  const JacobianDecomposition d = decompose_jacobian(e);
  const auto j = [&](int m, int n) { return entry_poly(d, m, n); };

  // Same first-column expansion as det3, term by term.
  Poly3 det;
  accumulate(det, +1.0, j(0, 0), j(1, 1), j(2, 2));
  accumulate(det, -1.0, j(0, 0), j(1, 2), j(2, 1));
  accumulate(det, -1.0, j(2, 0), j(1, 1), j(0, 2));
  accumulate(det, -1.0, j(1, 0), j(0, 1), j(2, 2));
  accumulate(det, +1.0, j(1, 0), j(2, 1), j(0, 2));
  accumulate(det, +1.0, j(2, 0), j(0, 1), j(1, 2));

  MetricPoly mp;
  mp.c = {det.c[0][0][0], det.c[1][0][0], det.c[0][1][0], det.c[0][0][1],
          det.c[1][0][1], det.c[0][1][1], det.c[0][0][2]};

  // Every monomial outside the seven-term basis cancels between the six
  // expansion terms; what remains is floating-point residue.
  double scale = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) scale = std::max(scale, std::abs(det.c[a][b][c]));
  if (scale > 0.0) {
    det.c[0][0][0] = det.c[1][0][0] = det.c[0][1][0] = det.c[0][0][1] = 0.0;
    det.c[1][0][1] = det.c[0][1][1] = det.c[0][0][2] = 0.0;
    double residue = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) residue = std::max(residue, std::abs(det.c[a][b][c]));
    assert(residue <= 1e-13 * scale);
    (void)residue;
  }
  return mp;
}

bool valid_metric(const WedgeElement& e) {
  return !first_nonpositive_metric_sample(e).has_value();
}

std::optional<std::size_t> first_nonpositive_metric_sample(
    const WedgeElement& e) {
  const auto& points = metric_sample_points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!(metric(e, points[k]) > 0.0)) return k;
  }
  return std::nullopt;
}

}  // namespace wedgemass
