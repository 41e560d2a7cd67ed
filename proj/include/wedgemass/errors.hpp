#pragma once

#include <stdexcept>

namespace wedgemass {

/// Malformed or semantically broken input (bad JSON, dangling references,
/// non-positive density, unknown options). Maps to CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numeric or geometric validation failure (failed verification checks,
/// invalid elements under strict mode). Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wedgemass
