#include "wedgemass/element.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wedgemass/random.hpp"
#include "wedgemass/study.hpp"

using namespace wedgemass;
using testing::random_point;

namespace {

WedgeElement identity_element() {
  WedgeElement e;
  for (int i = 0; i < 6; ++i) {
    const NaturalPoint& p = natural_nodes()[i];
    e.nodes[i] = {p.xi, p.eta, p.zeta};
  }
  return e;
}

}  // namespace

TEST_CASE("shape values at nodes and centroid") {
  const Vec6 at_node1 = shape_values({0.0, 0.0, -1.0});
  CHECK(at_node1 == Vec6{1.0, 0.0, 0.0, 0.0, 0.0, 0.0});

  const Vec6 at_centroid = shape_values(reference_centroid());
  for (double v : at_centroid) CHECK(v == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  const Vec6 at_node5 = shape_values({1.0, 0.0, 1.0});
  CHECK(at_node5 == Vec6{0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
}

TEST_CASE("shape functions satisfy the Kronecker property") {
  for (int j = 0; j < 6; ++j) {
    const Vec6 phi = shape_values(natural_nodes()[j]);
    for (int i = 0; i < 6; ++i) {
      CHECK(phi[i] == (i == j ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("partition of unity at 100 random points") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Vec6 phi = shape_values(random_point(rng));
    double sum = 0.0;
    for (double v : phi) sum += v;
    CHECK(std::abs(sum - 1.0) <= 1e-15);
  }
}

TEST_CASE("shape gradients match central differences") {
  std::mt19937_64 rng(13);
  const double h = 1e-6;
  for (int t = 0; t < 10; ++t) {
    const NaturalPoint p = random_point(rng);
    const auto grads = shape_gradients(p);
    for (int i = 0; i < 6; ++i) {
      const Vec6 px = shape_values({p.xi + h, p.eta, p.zeta});
      const Vec6 mx = shape_values({p.xi - h, p.eta, p.zeta});
      const Vec6 pe = shape_values({p.xi, p.eta + h, p.zeta});
      const Vec6 me = shape_values({p.xi, p.eta - h, p.zeta});
      const Vec6 pz = shape_values({p.xi, p.eta, p.zeta + h});
      const Vec6 mz = shape_values({p.xi, p.eta, p.zeta - h});
      CHECK(grads[i][0] == doctest::Approx((px[i] - mx[i]) / (2 * h)).epsilon(1e-8));
      CHECK(grads[i][1] == doctest::Approx((pe[i] - me[i]) / (2 * h)).epsilon(1e-8));
      CHECK(grads[i][2] == doctest::Approx((pz[i] - mz[i]) / (2 * h)).epsilon(1e-8));
    }
  }
}

TEST_CASE("det3 agrees with a generic cofactor expansion") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    Mat3 m;
    for (auto& row : m) {
      for (double& v : row) v = u(rng);
    }
    const double generic =
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    CHECK(std::abs(det3(m) - generic) <= 1e-14 * std::max(1.0, std::abs(generic)));
  }
}

TEST_CASE("jacobian of the identity-map element is the identity") {
  const WedgeElement e = identity_element();
  std::mt19937_64 rng(19);
  for (int t = 0; t < 5; ++t) {
    const Mat3 j = jacobian_matrix(e, random_point(rng));
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        CHECK(j[m][n] == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-15));
      }
    }
    CHECK(metric(e, random_point(rng)) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("metric of the coarse family") {
  std::mt19937_64 rng(23);
  const WedgeElement flat = coarse_element(0.0);
  for (int t = 0; t < 10; ++t) {
    CHECK(metric(flat, random_point(rng)) == doctest::Approx(1.0).epsilon(1e-14));
  }

  // At the centroid the xi*zeta, eta*zeta and zeta^2 terms vanish.
  const WedgeElement coarse = coarse_element(0.5);
  CHECK(metric(coarse, reference_centroid()) ==
        doctest::Approx(1.9531250 - 0.6250 / 3.0).epsilon(1e-15));
}

TEST_CASE("jacobian decomposition: affine map collapses to the constant") {
  const WedgeElement e = identity_element();
  const JacobianDecomposition d = decompose_jacobian(e);
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      CHECK(d.constant[m][n] == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-15));
      CHECK(d.d_xi[m][n] == 0.0);
      CHECK(d.d_eta[m][n] == 0.0);
      CHECK(d.d_zeta[m][n] == 0.0);
    }
  }
}

TEST_CASE("jacobian decomposition reconstructs the jacobian") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const WedgeElement e = random_element(rng);
    const JacobianDecomposition d = decompose_jacobian(e);
    for (int q = 0; q < 10; ++q) {
      const NaturalPoint p = random_point(rng);
      const Mat3 direct = jacobian_matrix(e, p);
      const Mat3 rebuilt = d.at(p);
      for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
          CHECK(std::abs(direct[m][n] - rebuilt[m][n]) <=
                1e-14 * std::max(1.0, std::abs(direct[m][n])));
        }
      }
    }
  }
}

TEST_CASE("jacobian decomposition sparsity structure") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const JacobianDecomposition d = decompose_jacobian(random_element(rng));
    for (int m = 0; m < 3; ++m) {
      CHECK(d.d_xi[m][0] == 0.0);
      CHECK(d.d_xi[m][1] == 0.0);
      CHECK(d.d_eta[m][0] == 0.0);
      CHECK(d.d_eta[m][1] == 0.0);
      CHECK(d.d_zeta[m][2] == 0.0);
    }
  }
}

TEST_CASE("jacobian decomposition constant block, coarse family entry") {
  // X-derivative entry (1,1) at delta = 1: (-X14 - X11 + X15 + X12)/2 = 3/2.
  const JacobianDecomposition d = decompose_jacobian(coarse_element(1.0));
  CHECK(d.constant[0][0] == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("metric polynomial of the coarse family") {
  const MetricPoly at_half = metric_poly(coarse_element(0.5));
  const std::array<double, 7> expected = {1.953125, -0.3125, -0.3125, 0.78125,
                                          -0.0625, -0.0625, 0.078125};
  for (int k = 0; k < 7; ++k) {
    CHECK(at_half.c[k] == doctest::Approx(expected[k]).epsilon(1e-14));
  }

  const MetricPoly flat = metric_poly(coarse_element(0.0));
  CHECK(flat.c[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (int k = 1; k < 7; ++k) CHECK(std::abs(flat.c[k]) <= 1e-15);
}

TEST_CASE("metric polynomial of an affine element is constant") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    double map_det = 0.0;
    const WedgeElement e = testing::random_affine_element(rng, &map_det);
    const MetricPoly mp = metric_poly(e);
    CHECK(mp.c[0] == doctest::Approx(map_det).epsilon(1e-13));
    for (int k = 1; k < 7; ++k) {
      CHECK(std::abs(mp.c[k]) <= 1e-14 * std::max(1.0, std::abs(mp.c[0])));
    }
  }
}

TEST_CASE("metric polynomial completeness on random elements") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const WedgeElement e = random_element(rng);
    const MetricPoly mp = metric_poly(e);
    for (int q = 0; q < 20; ++q) {
      const NaturalPoint p = random_point(rng);
      const double direct = metric(e, p);
      CHECK(std::abs(mp(p) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("inside-domain predicate") {
  CHECK(NaturalPoint{0.0, 0.0, -1.0}.inside_reference());
  CHECK(NaturalPoint{1.0 / 3.0, 1.0 / 3.0, 0.0}.inside_reference());
  CHECK(NaturalPoint{0.5, 0.5, 1.0}.inside_reference());
  CHECK_FALSE(NaturalPoint{13.0 / 12.0, 1.0 / 12.0, -0.25}.inside_reference());
  CHECK_FALSE(NaturalPoint{0.2, 0.2, 1.5}.inside_reference());
  CHECK_FALSE(NaturalPoint{-0.1, 0.2, 0.0}.inside_reference());
  CHECK_FALSE(NaturalPoint{0.6, 0.5, 0.0}.inside_reference());
}

TEST_CASE("validity predicate flags inverted elements") {
  CHECK(valid_metric(coarse_element(0.0)));
  CHECK(valid_metric(coarse_element(2.0)));

  WedgeElement flipped = coarse_element(0.0);
  std::swap(flipped.nodes[0], flipped.nodes[3]);
  std::swap(flipped.nodes[1], flipped.nodes[4]);
  std::swap(flipped.nodes[2], flipped.nodes[5]);
  CHECK_FALSE(valid_metric(flipped));
  CHECK(first_nonpositive_metric_sample(flipped).has_value());
  CHECK_FALSE(first_nonpositive_metric_sample(coarse_element(0.5)).has_value());
}
