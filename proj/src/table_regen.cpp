#include "wedgemass/table_regen.hpp"

#include <sstream>

#include "wedgemass/coefficient_tables.hpp"

namespace wedgemass {

std::string TableMismatch::describe() const {
  std::ostringstream os;
  os << table << " entry (" << row + 1;
  if (col >= 0) os << ", " << col + 1;
  os << "): stored " << stored << ", integrated " << integrated.num;
  if (!integrated.is_integer()) os << "/" << integrated.den;
  return os.str();
}

namespace {

RationalPoly mono(int a, int b, int c, Rational coeff) {
  return RationalPoly::monomial(a, b, c, coeff);
}

// Coefficient functions of the linear metric interpolation.
std::array<RationalPoly, 4> lm_coefficient_polys() {
  const Rational one(1);
  return {
      RationalPoly::constant(Rational(11, 12)) + mono(1, 0, 0, Rational(-1)) +
          mono(0, 1, 0, Rational(-1)) + mono(0, 0, 1, Rational(-1)),
      RationalPoly::constant(Rational(-1, 12)) + mono(1, 0, 0, one),
      RationalPoly::constant(Rational(-1, 12)) + mono(0, 1, 0, one),
      RationalPoly::constant(Rational(1, 4)) + mono(0, 0, 1, one),
  };
}

RationalPoly bubble_poly() {
  return RationalPoly::constant(Rational(1)) + mono(0, 0, 2, Rational(-1));
}

// Coefficient functions of the exact seven-point interpolation: cardinal on
// the six-nodes-plus-centroid stencil over the metric's monomial space.
std::array<RationalPoly, 7> ex_coefficient_polys(
    const std::array<RationalPoly, 6>& phi) {
  std::array<RationalPoly, 7> c;
  for (int k = 0; k < 6; ++k) {
    c[k] = phi[k] + bubble_poly().scaled(Rational(-1, 6));
  }
  c[6] = bubble_poly();
  return c;
}

// Legacy variant: the centroid correction is carried entirely by the two
// apex-node functions. Not exact; kept to certify the legacy tables.
std::array<RationalPoly, 7> legacy_ex_coefficient_polys(
    const std::array<RationalPoly, 6>& phi) {
  std::array<RationalPoly, 7> c;
  for (int k = 0; k < 6; ++k) c[k] = phi[k];
  c[0] = c[0] + bubble_poly().scaled(Rational(-1, 2));
  c[3] = c[3] + bubble_poly().scaled(Rational(-1, 2));
  c[6] = bubble_poly();
  return c;
}

void check_consistent(std::vector<TableMismatch>& out, const std::string& name,
                      const RationalPoly& coeff_fn, int divisor,
                      const tables::Mat6i& stored,
                      const std::array<RationalPoly, 6>& phi) {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const Rational value =
          integrate(phi[i] * phi[j] * coeff_fn) * Rational(divisor);
      if (!value.is_integer() || value.num != stored[i][j]) {
        out.push_back({name, i, j, stored[i][j], value});
      }
    }
  }
}

void check_lumped(std::vector<TableMismatch>& out, const std::string& name,
                  const RationalPoly& coeff_fn, int divisor,
                  const tables::Vec6i& stored,
                  const std::array<RationalPoly, 6>& phi) {
  for (int i = 0; i < 6; ++i) {
    const Rational value = integrate(phi[i] * coeff_fn) * Rational(divisor);
    if (!value.is_integer() || value.num != stored[i]) {
      out.push_back({name, i, -1, stored[i], value});
    }
  }
}

}  // namespace

std::vector<TableMismatch> regenerate_coefficient_tables() {
  std::array<RationalPoly, 6> phi;
  for (int i = 0; i < 6; ++i) phi[i] = shape_polynomial(i);

  std::vector<TableMismatch> mismatches;

  const RationalPoly unit = RationalPoly::constant(Rational(1));
  check_consistent(mismatches, "cm consistent", unit, tables::kCmDivisor,
                   tables::kCmConsistent, phi);
  check_lumped(mismatches, "cm lumped", unit, tables::kCmLumpedDivisor,
               tables::kCmLumped, phi);

  const auto lm = lm_coefficient_polys();
  for (int k = 0; k < 4; ++k) {
    const std::string suffix = "[" + std::to_string(k + 1) + "]";
    check_consistent(mismatches, "lm consistent" + suffix, lm[k],
                     tables::kLmDivisor, tables::kLmConsistent[k], phi);
    check_lumped(mismatches, "lm lumped" + suffix, lm[k],
                 tables::kLmLumpedDivisor, tables::kLmLumped[k], phi);
  }

  const auto ex = ex_coefficient_polys(phi);
  const auto legacy = legacy_ex_coefficient_polys(phi);
  for (int k = 0; k < 7; ++k) {
    const std::string suffix = "[" + std::to_string(k + 1) + "]";
    check_consistent(mismatches, "ex consistent" + suffix, ex[k],
                     tables::kExDivisor, tables::kExConsistent[k], phi);
    check_lumped(mismatches, "ex lumped" + suffix, ex[k],
                 tables::kExLumpedDivisor, tables::kExLumped[k], phi);
    check_consistent(mismatches, "legacy ex consistent" + suffix, legacy[k],
                     tables::kLegacyExDivisor, tables::kLegacyExConsistent[k],
                     phi);
    check_lumped(mismatches, "legacy ex lumped" + suffix, legacy[k],
                 tables::kLegacyExLumpedDivisor, tables::kLegacyExLumped[k],
                 phi);
  }

  return mismatches;
}

}  // namespace wedgemass
