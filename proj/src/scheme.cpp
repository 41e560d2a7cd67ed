#include "wedgemass/scheme.hpp"

namespace wedgemass {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::cm: return "cm";
    case Scheme::lm: return "lm";
    case Scheme::ex: return "ex";
    case Scheme::gauss2: return "gauss2";
    case Scheme::gauss9: return "gauss9";
    case Scheme::reference: return "reference";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

int metric_eval_count(Scheme s) {
  switch (s) {
    case Scheme::cm: return 1;
    case Scheme::lm: return 4;
    case Scheme::ex: return 7;
    case Scheme::gauss2: return 2;
    case Scheme::gauss9: return 9;
    case Scheme::reference: return 21;
  }
  return 0;
}

}  // namespace wedgemass
