#include "smf/mechanisms.hpp"

#include <cmath>
#include <stdexcept>

#include "smf/core.hpp"

namespace smf::mech {

double stroke(double theta, double R, double e) {
    if (!(R > 0.0) || !(e >= 0.0)) {
        throw std::invalid_argument("stroke: require R > 0 and e >= 0");
    }
    try {
        return R * rex(theta, ExCenter(e / R, pi), Determination::first);
    } catch (const EvalError&) {
        throw EvalError(EvalError::Kind::domain,
                        "stroke: crank cannot reach, R^2 < e^2*sin^2(theta)");
    }
}

double position_transfer(double theta, const ExCenter& ex, Determination det) {
    return rex(theta, ex, det);
}

std::vector<OscillatorSample> simulate_oscillator(const ExCenter& ex, double Omega, double R,
                                                  double t_end, double dt) {
    if (std::abs(ex.s) > 1.0) {
        throw std::invalid_argument("simulate_oscillator: |s| <= 1 required");
    }
    if (!(Omega > 0.0) || !(R > 0.0)) {
        throw std::invalid_argument("simulate_oscillator: require Omega > 0 and R > 0");
    }
    if (!(dt > 0.0) || !(dt <= t_end)) {
        throw std::invalid_argument("simulate_oscillator: require 0 < dt <= t_end");
    }

    const auto alpha_rate = [&](double t) {
        return Omega * dex(Omega * t, ex, Determination::first);
    };
    const auto alpha_closed = [&](double t) {
        return aex_lift(Omega * t, ex, Determination::first);
    };

    // Samples at t_k = k*dt; the +1e-9 slack admits t_end = m*dt up to rounding.
    const long long steps = static_cast<long long>(std::floor(t_end / dt + 1e-9));

    std::vector<OscillatorSample> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);

    double alpha_rk4 = alpha_closed(0.0);
    double rate_left = alpha_rate(0.0);
    for (long long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        OscillatorSample sample;
        sample.t = t;
        sample.theta = wrap_two_pi(Omega * t);
        sample.alpha = alpha_closed(t);
        sample.x = R * std::cos(sample.alpha);
        sample.omega = alpha_rate(t);
        sample.alpha_rk4 = alpha_rk4;
        out.push_back(sample);

        if (k < steps) {
            // The rate depends on t only, so classical RK4 collapses to
            // Simpson's rule over the step.
            const double t_next = static_cast<double>(k + 1) * dt;
            const double rate_mid = alpha_rate(t + 0.5 * dt);
            const double rate_right = alpha_rate(t_next);
            alpha_rk4 += dt / 6.0 * (rate_left + 4.0 * rate_mid + rate_right);
            rate_left = rate_right;
        }
    }
    return out;
}

double sec_force(double x, const ExCenter& ex, Determination det) {
    return x * tex(x, ex, det);
}

std::vector<SecPoint> sec_characteristic(const ExCenter& ex, Determination det, double x_max,
                                         int n) {
    if (!(x_max > 0.0)) {
        throw std::invalid_argument("sec_characteristic: require x_max > 0");
    }
    if (n < 2) {
        throw std::invalid_argument("sec_characteristic: require n >= 2");
    }
    std::vector<SecPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = x_max * static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back({x, sec_force(x, ex, det)});
    }
    return out;
}

}  // namespace smf::mech
