#pragma once

#include <vector>

#include "smf/types.hpp"

/// Mechanism and vibration applications of the ex-centric functions.
namespace smf::mech {

/// Slider position of a slider-crank with crank radius R and eccentricity e:
///   stroke(theta) = R * rex1(theta; s = e/R, eps = pi)
///                 = e*cos(theta) + sqrt(R^2 - e^2*sin^2(theta)).
/// Requires R > 0 and e >= 0; throws EvalError{domain} when the crank cannot
/// reach (R^2 < e^2*sin^2 theta, possible only for e > R).
[[nodiscard]] double stroke(double theta, double R, double e);

/// Position transfer function of the ex-centric pair: rex(theta).
[[nodiscard]] double position_transfer(double theta, const ExCenter& ex, Determination det);

/// One state of the nonlinear oscillator driven at constant ex-centric rate:
/// theta advances as Omega*t while the mass angle alpha follows aex1.
struct OscillatorSample {
    double t = 0.0;
    double theta = 0.0;      ///< Omega*t, wrapped to [0, 2*pi)
    double alpha = 0.0;      ///< closed-form track, continuous (not wrapped)
    double x = 0.0;          ///< R*cos(alpha)
    double omega = 0.0;      ///< angular speed Omega*dex1(Omega*t)
    double alpha_rk4 = 0.0;  ///< verification twin of alpha, integrated numerically
};

/// Simulates x(t) = R*cos(alpha(t)) with alpha' = Omega*dex1(Omega*t) by both
/// the closed form and fixed-step RK4, sampled at t = 0, dt, ..., t_end.
/// The motion is 2*pi/Omega-periodic; at |s| = 1 the speed is two-valued
/// {0, 2*Omega} and the mass dwells at (R, 0) for half of each period.
/// Requires |s| <= 1, Omega > 0, R > 0, 0 < dt <= t_end.
[[nodiscard]] std::vector<OscillatorSample> simulate_oscillator(const ExCenter& ex, double Omega,
                                                                double R, double t_end, double dt);

/// Static elastic characteristic: restoring force y = x * tex(x), with the
/// displacement x fed to tex as an angle in radians. s = 0 gives y = x*tan x
/// (nearly linear for small x); s of either sign softens or hardens the
/// characteristic relative to that reference.
[[nodiscard]] double sec_force(double x, const ExCenter& ex, Determination det);

/// One point of a sampled static elastic characteristic.
struct SecPoint {
    double x = 0.0;
    double force = 0.0;
};

/// The characteristic sampled at n evenly spaced displacements on [0, x_max].
/// Requires x_max > 0 and n >= 2.
[[nodiscard]] std::vector<SecPoint> sec_characteristic(const ExCenter& ex, Determination det,
                                                       double x_max, int n);

}  // namespace smf::mech
