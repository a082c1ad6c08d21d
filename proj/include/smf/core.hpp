#pragma once

#include <utility>

#include "smf/types.hpp"

/// Closed-form ex-centric circular functions.
///
/// Geometry: a line through the pole S(s, eps) at direction angle theta cuts
/// the unit circle centered at O in up to two points W1, W2 (the two
/// determinations). Functions of theta ("ex-centric variable", measured at S)
/// use lowercase names; functions of alpha ("centric variable", the polar
/// angle of W at O) use capitalized names. Angles are radians; angle results
/// are wrapped to [0, 2*pi).
namespace smf {

/// Radicand delta(theta) = 1 - s^2 * sin^2(theta - eps).
/// Negative exactly when the line misses the circle (possible only for
/// |s| > 1); the caller decides how to treat the sign.
[[nodiscard]] double delta(double theta, const ExCenter& ex) noexcept;

/// Ex-centric radius: signed distance from S to the selected intersection,
///   rex(theta) = -s*cos(theta - eps) +/- sqrt(delta(theta)).
/// First determination is >= 0 whenever |s| <= 1.
/// Throws EvalError{domain} when delta(theta) < 0.
[[nodiscard]] double rex(double theta, const ExCenter& ex, Determination det);

/// Centric radius: distance |W - S| expressed in alpha,
///   Rex(alpha) = +/- sqrt(1 + s^2 - 2*s*cos(alpha - eps)).
/// Total; the second determination is the negated root.
[[nodiscard]] double Rex(double alpha, const ExCenter& ex, Determination det) noexcept;

/// Ex-centric angle -> centric angle of the selected intersection:
///   aex1(theta) = theta - arcsin(s*sin(theta - eps))
///   aex2(theta) = theta + pi + arcsin(s*sin(theta - eps))
/// wrapped to [0, 2*pi). Throws EvalError{domain} when delta(theta) < 0.
[[nodiscard]] double aex(double theta, const ExCenter& ex, Determination det);

/// Continuous (un-wrapped) branch of aex; aex == wrap_two_pi(aex_lift).
/// Useful when winding matters (e.g. integrating angular motion).
[[nodiscard]] double aex_lift(double theta, const ExCenter& ex, Determination det);

/// Centric angle -> ex-centric angle: direction angle at S of the line S->W
/// with W = (cos alpha, sin alpha), wrapped to [0, 2*pi); the second
/// determination is the opposite ray (+pi). Inverse of aex on the first
/// determination for |s| < 1.
/// Throws EvalError{undefined} when W coincides with S (|s| = 1, alpha = eps).
[[nodiscard]] double Aex(double alpha, const ExCenter& ex, Determination det);

/// Coordinates of W reached from the ex-centric variable:
///   (cex theta, sex theta) = (cos(aex theta), sin(aex theta)).
[[nodiscard]] PlanePoint cex_sex(double theta, const ExCenter& ex, Determination det);
[[nodiscard]] double cex(double theta, const ExCenter& ex, Determination det);
[[nodiscard]] double sex(double theta, const ExCenter& ex, Determination det);

/// Centric-variable cosine/sine pair: (cos(Aex alpha), sin(Aex alpha)).
[[nodiscard]] PlanePoint Cex_Sex(double alpha, const ExCenter& ex, Determination det);
[[nodiscard]] double Cex(double alpha, const ExCenter& ex, Determination det);
[[nodiscard]] double Sex(double alpha, const ExCenter& ex, Determination det);

/// Derivative d(aex)/d(theta):
///   dex(theta) = 1 - s*cos(theta - eps) / (+/- sqrt(delta(theta))).
/// Throws EvalError{domain} when delta(theta) <= 0, except at the |s| = 1
/// tangency angles where dex has a finite jump (0 <-> 2 for s = 1): there the
/// right-sided limit 1 + branch_sign(det)*s*sign(sin(theta - eps)) is
/// returned by convention (documented, not smoothed).
[[nodiscard]] double dex(double theta, const ExCenter& ex, Determination det);

/// Derivative d(Aex)/d(alpha) = (1 - s*cos(alpha - eps)) / Rex(alpha)^2.
/// The value is the same for both determinations (Aex2 = Aex1 + pi); det is
/// accepted for interface symmetry only.
/// Throws EvalError{undefined} when Rex(alpha) = 0 (|s| = 1, alpha = eps).
[[nodiscard]] double Dex(double alpha, const ExCenter& ex, Determination det);

/// Ex-centric tangent: tex(theta) = sex(theta)/cex(theta) = tan(aex theta).
/// Throws EvalError{undefined} at cex(theta) = 0 and propagates aex's domain
/// error.
[[nodiscard]] double tex(double theta, const ExCenter& ex, Determination det);

/// Elevated-curve coordinates, ex-centric variable:
///   (cel theta, sel theta) = rex(theta) * (cos theta, sin theta).
[[nodiscard]] PlanePoint cel_sel(double theta, const ExCenter& ex, Determination det);
[[nodiscard]] double cel(double theta, const ExCenter& ex, Determination det);
[[nodiscard]] double sel(double theta, const ExCenter& ex, Determination det);

/// Elevated-curve coordinates, centric variable:
///   (Cel alpha, Sel alpha) = Rex(alpha) * (cos alpha, sin alpha).
[[nodiscard]] PlanePoint Cel_Sel(double alpha, const ExCenter& ex, Determination det);
[[nodiscard]] double Cel(double alpha, const ExCenter& ex, Determination det);
[[nodiscard]] double Sel(double alpha, const ExCenter& ex, Determination det);

/// Unit direction and its derivative: rad(a) = (cos a, sin a),
/// der(a) = (-sin a, cos a).
[[nodiscard]] std::pair<Phasor, Phasor> rad_der(double angle) noexcept;

/// Intersection point W = S + rex(theta)*rad(theta); equals
/// (cex theta, sex theta) componentwise.
[[nodiscard]] PlanePoint w_point(double theta, const ExCenter& ex, Determination det);

/// Velocity of W along the circle for unit d(theta)/dt:
///   v = dex(theta) * der(aex theta);  |v| = |dex theta|.
[[nodiscard]] PlanePoint w_velocity(double theta, const ExCenter& ex, Determination det);

}  // namespace smf
