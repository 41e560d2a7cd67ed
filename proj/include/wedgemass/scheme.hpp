#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace wedgemass {

/// Integration rule selector. cm, lm and ex are the interpolation-based
/// closed-form rules (one, four and seven metric evaluations); gauss2 and
/// gauss9 are the classical wedge quadratures; reference is a high-order
/// rule exact for the full mass integrand.
enum class Scheme { cm, lm, ex, gauss2, gauss9, reference };

inline constexpr std::array<Scheme, 6> kAllSchemes = {
    Scheme::cm,     Scheme::lm,     Scheme::ex,
    Scheme::gauss2, Scheme::gauss9, Scheme::reference,
};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// Metric (jacobian determinant) evaluations one element matrix costs.
int metric_eval_count(Scheme s);

}  // namespace wedgemass
