#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "wedgemass/element.hpp"
#include "wedgemass/mass_matrix.hpp"

namespace wedgemass {

/// Exact fraction. Magnitudes stay small here (numerators and denominators
/// bounded by a few factorials), so a normalized int64 pair suffices.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// Exact integral of xi^a * eta^b * zeta^c over the reference wedge:
/// a! b! / (a+b+2)! over the unit triangle times (1 + (-1)^c) / (c + 1)
/// over zeta in [-1, +1].
Rational monomial_integral(int a, int b, int c);

/// Sparse trivariate polynomial keyed by (xi, eta, zeta) exponents.
template <typename Coeff>
class TriPoly {
 public:
  using Key = std::array<int, 3>;

  TriPoly() = default;

  static TriPoly constant(Coeff value) {
    TriPoly p;
    p.add({0, 0, 0}, value);
    return p;
  }

  static TriPoly monomial(int a, int b, int c, Coeff coeff) {
    TriPoly p;
    p.add({a, b, c}, coeff);
    return p;
  }

  void add(const Key& k, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second = it->second + c;
  }

  TriPoly operator+(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }

  TriPoly operator*(const TriPoly& o) const {
    TriPoly r;
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : o.terms_) {
        r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
      }
    }
    return r;
  }

  TriPoly scaled(const Coeff& s) const {
    TriPoly r;
    for (const auto& [k, c] : terms_) r.add(k, c * s);
    return r;
  }

  const std::map<Key, Coeff>& terms() const { return terms_; }

 private:
  std::map<Key, Coeff> terms_;
};

using RationalPoly = TriPoly<Rational>;
using RealPoly = TriPoly<double>;

/// Term-by-term integration over the reference wedge.
Rational integrate(const RationalPoly& p);
double integrate(const RealPoly& p);

/// Shape function i (0-based) as an exact-coefficient polynomial.
RationalPoly shape_polynomial(int i);

/// Ground-truth mass matrices: the integrand phi_i * phi_j * J is built as
/// a polynomial (exact shape-pair coefficients times the seven-term metric
/// polynomial) and integrated monomial by monomial. Independent of the
/// closed-form kernels and of every quadrature rule.
MassMatrix exact_consistent(const WedgeElement& e);
LumpedMass exact_lumped(const WedgeElement& e);

}  // namespace wedgemass
