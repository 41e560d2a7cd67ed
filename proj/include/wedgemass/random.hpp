#pragma once

#include <random>

#include "wedgemass/element.hpp"

namespace wedgemass {

/// Random wedge: the natural node positions pushed through a random affine
/// map (identity plus uniform perturbation) with independent per-node
/// jitter and a random density in [0.5, 2]. Draws a fixed number of
/// variates, so a given rng state always yields the same element.
WedgeElement random_element(std::mt19937_64& rng);

/// Rejection-samples random_element until the metric is positive at all
/// seven sample points.
WedgeElement random_valid_element(std::mt19937_64& rng);

}  // namespace wedgemass
