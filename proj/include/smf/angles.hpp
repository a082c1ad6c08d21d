#pragma once

#include <cmath>
#include <numbers>

namespace smf {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Wraps an angle to the canonical interval [0, 2*pi).
[[nodiscard]] inline double wrap_two_pi(double angle) noexcept {
    double r = std::fmod(angle, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod(-tiny, 2*pi) + 2*pi can round up to exactly 2*pi.
    return r < two_pi ? r : 0.0;
}

/// Wraps an angle difference to [-pi, pi].
[[nodiscard]] inline double wrap_signed(double angle) noexcept {
    return std::remainder(angle, two_pi);
}

/// Distance between two directions on the circle, in [0, pi].
[[nodiscard]] inline double angle_distance(double a, double b) noexcept {
    return std::abs(std::remainder(a - b, two_pi));
}

}  // namespace smf
