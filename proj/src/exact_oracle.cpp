#include "wedgemass/exact_oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace wedgemass {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

namespace {

// Degrees here are bounded by construction; 10! covers a+b+2 for every
// integrand this library builds.
constexpr std::array<std::int64_t, 11> kFactorial = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800};

std::int64_t factorial(int n) {
  if (n < 0 || n >= static_cast<int>(kFactorial.size())) {
    throw std::invalid_argument("factorial: exponent out of range");
  }
  return kFactorial[static_cast<std::size_t>(n)];
}

}  // namespace

Rational monomial_integral(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) {
    throw std::invalid_argument("monomial_integral: negative exponent");
  }
  if (c % 2 == 1) return Rational(0);
  const Rational triangle(factorial(a) * factorial(b), factorial(a + b + 2));
  const Rational line(2, c + 1);
  return triangle * line;
}

Rational integrate(const RationalPoly& p) {
  Rational sum(0);
  for (const auto& [k, coeff] : p.terms()) {
    sum = sum + coeff * monomial_integral(k[0], k[1], k[2]);
  }
  return sum;
}

double integrate(const RealPoly& p) {
  double sum = 0.0;
  for (const auto& [k, coeff] : p.terms()) {
    sum += coeff * monomial_integral(k[0], k[1], k[2]).to_double();
  }
  return sum;
}

RationalPoly shape_polynomial(int i) {
  if (i < 0 || i > 5) throw std::invalid_argument("shape_polynomial: bad index");
  const Rational half(1, 2);
  RationalPoly one = RationalPoly::constant(Rational(1));
  RationalPoly xi = RationalPoly::monomial(1, 0, 0, Rational(1));
  RationalPoly eta = RationalPoly::monomial(0, 1, 0, Rational(1));
  RationalPoly lam = one + xi.scaled(Rational(-1)) + eta.scaled(Rational(-1));
  RationalPoly lo = (one + RationalPoly::monomial(0, 0, 1, Rational(-1))).scaled(half);
  RationalPoly hi = (one + RationalPoly::monomial(0, 0, 1, Rational(1))).scaled(half);
  switch (i) {
    case 0: return lam * lo;
    case 1: return xi * lo;
    case 2: return eta * lo;
    case 3: return lam * hi;
    case 4: return xi * hi;
    default: return eta * hi;
  }
}

namespace {

// Exponents of the seven metric monomials {1, xi, eta, zeta, xi*zeta,
// eta*zeta, zeta^2}, in MetricPoly coefficient order.
constexpr std::array<std::array<int, 3>, 7> kMetricMonomials = {{
    {0, 0, 0},
    {1, 0, 0},
    {0, 1, 0},
    {0, 0, 1},
    {1, 0, 1},
    {0, 1, 1},
    {0, 0, 2},
}};

// pair_weights[i][j][k] = integral of phi_i * phi_j * metric monomial k;
// diag_weights[i][k] = integral of phi_i * metric monomial k. Computed once
// from the exact shape polynomials.
struct OracleTables {
  double pair_weights[6][6][7];
  double diag_weights[6][7];
};

const OracleTables& oracle_tables() {
  static const OracleTables tables = [] {
    OracleTables t{};
    std::array<RationalPoly, 6> phi;
    for (int i = 0; i < 6; ++i) phi[i] = shape_polynomial(i);
    for (int i = 0; i < 6; ++i) {
      for (int j = i; j < 6; ++j) {
        const RationalPoly product = phi[i] * phi[j];
        for (int k = 0; k < 7; ++k) {
          const auto& mono = kMetricMonomials[k];
          const RationalPoly shifted =
              product * RationalPoly::monomial(mono[0], mono[1], mono[2], Rational(1));
          const double w = integrate(shifted).to_double();
          t.pair_weights[i][j][k] = w;
          t.pair_weights[j][i][k] = w;
        }
      }
      for (int k = 0; k < 7; ++k) {
        const auto& mono = kMetricMonomials[k];
        const RationalPoly shifted =
            phi[i] * RationalPoly::monomial(mono[0], mono[1], mono[2], Rational(1));
        t.diag_weights[i][k] = integrate(shifted).to_double();
      }
    }
    return t;
  }();
  return tables;
}

}  // namespace

MassMatrix exact_consistent(const WedgeElement& e) {
  const MetricPoly mp = metric_poly(e);
  const OracleTables& t = oracle_tables();
  MassMatrix mass;
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      double v = 0.0;
      for (int k = 0; k < 7; ++k) v += t.pair_weights[i][j][k] * mp.c[k];
      v *= e.density;
      mass(i, j) = v;
      mass(j, i) = v;
    }
  }
  return mass;
}

LumpedMass exact_lumped(const WedgeElement& e) {
  const MetricPoly mp = metric_poly(e);
  const OracleTables& t = oracle_tables();
  LumpedMass lumped;
  for (int i = 0; i < 6; ++i) {
    double v = 0.0;
    for (int k = 0; k < 7; ++k) v += t.diag_weights[i][k] * mp.c[k];
    lumped[i] = v * e.density;
  }
  return lumped;
}

}  // namespace wedgemass
