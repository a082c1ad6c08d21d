#pragma once

#include <array>

#include "smf/types.hpp"

/// Brute-force geometric ground truth for the ex-centric functions.
///
/// Everything here is built from the line-circle intersection quadratic,
/// atan2 and central finite differences only — deliberately no reference to
/// the closed-form module — so closed forms can be tested against it.
namespace smf::oracle {

/// Intersections of a directed line with a circle.
///
/// Invariants: `count` is 0, 1 (tangency) or 2; valid entries of `points` lie
/// on the circle to ~1e-12 for unit-scale inputs; `signed_distances` are the
/// parameters t of P(t) = pole + t*(cos theta, sin theta), ordered
/// decreasing, so when the pole is interior the positive-ray point is first.
struct IntersectionResult {
    int count = 0;
    std::array<PlanePoint, 2> points{};
    std::array<double, 2> signed_distances{};
};

/// Solves |pole + t*(cos theta, sin theta) - center|^2 = radius^2 for t.
///
/// The quadratic is solved in the cancellation-stable form: the larger-
/// magnitude root directly, the other from the root product. Discriminants
/// within 1e-12 * max(1, radius^2) of zero classify as tangency (count 1).
[[nodiscard]] IntersectionResult line_circle_intersections(const PlanePoint& pole,
                                                           double theta,
                                                           const PlanePoint& center,
                                                           double radius);

/// Signed distance from the pole S(s, eps) to the selected intersection of
/// the theta-directed line with the unit circle centered at O.
/// Throws EvalError{domain} when the line misses the circle.
[[nodiscard]] double rex(double theta, const ExCenter& ex, Determination det);

/// Polar angle (at O, wrapped to [0, 2*pi)) of the selected intersection.
/// Throws EvalError{domain} when the line misses the circle.
[[nodiscard]] double alpha(double theta, const ExCenter& ex, Determination det);

/// Central finite difference (f(x+h) - f(x-h)) / (2h).
/// Evaluation failures propagate out of f.
template <typename F>
[[nodiscard]] double fd_derivative(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace smf::oracle
