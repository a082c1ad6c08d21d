#pragma once

#include <random>

#include "smf/angles.hpp"

namespace testsupport {

/// Fixed-seed RNG so property-style tests fail reproducibly.
inline std::mt19937_64 make_rng() { return std::mt19937_64{0x5eedULL}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double random_angle(std::mt19937_64& rng) { return uniform(rng, 0.0, smf::two_pi); }

}  // namespace testsupport
