#include "smf/core.hpp"

#include <algorithm>
#include <cmath>

namespace smf {

double delta(double theta, const ExCenter& ex) noexcept {
    const double u = ex.s * std::sin(theta - ex.eps);
    return 1.0 - u * u;
}

double rex(double theta, const ExCenter& ex, Determination det) {
    const double d = delta(theta, ex);
    if (d < 0.0) {
        throw EvalError(EvalError::Kind::domain,
                        "rex: delta(theta) < 0, the line through S misses the circle");
    }
    return -ex.s * std::cos(theta - ex.eps) + branch_sign(det) * std::sqrt(d);
}

double Rex(double alpha, const ExCenter& ex, Determination det) noexcept {
    const double r2 = 1.0 + ex.s * ex.s - 2.0 * ex.s * std::cos(alpha - ex.eps);
    // r2 = |W - S|^2 >= 0; clamp fp residue at the |s| = 1, alpha = eps corner.
    return branch_sign(det) * std::sqrt(std::max(r2, 0.0));
}

double aex_lift(double theta, const ExCenter& ex, Determination det) {
    const double d = delta(theta, ex);
    if (d < 0.0) {
        throw EvalError(EvalError::Kind::domain,
                        "aex: delta(theta) < 0, the line through S misses the circle");
    }
    const double u = std::clamp(ex.s * std::sin(theta - ex.eps), -1.0, 1.0);
    const double a = std::asin(u);
    return det == Determination::first ? theta - a : theta + pi + a;
}

double aex(double theta, const ExCenter& ex, Determination det) {
    return wrap_two_pi(aex_lift(theta, ex, det));
}

double Aex(double alpha, const ExCenter& ex, Determination det) {
    const PlanePoint s_pt = ex.point();
    const double dx = std::cos(alpha) - s_pt.x;
    const double dy = std::sin(alpha) - s_pt.y;
    if (dx == 0.0 && dy == 0.0) {
        throw EvalError(EvalError::Kind::undefined,
                        "Aex: W coincides with the pole S (|s| = 1, alpha = eps)");
    }
    const double dir = std::atan2(dy, dx);
    return det == Determination::first ? wrap_two_pi(dir) : wrap_two_pi(dir + pi);
}

PlanePoint cex_sex(double theta, const ExCenter& ex, Determination det) {
    const double a = aex(theta, ex, det);
    return {std::cos(a), std::sin(a)};
}

double cex(double theta, const ExCenter& ex, Determination det) {
    return cex_sex(theta, ex, det).x;
}

double sex(double theta, const ExCenter& ex, Determination det) {
    return cex_sex(theta, ex, det).y;
}

PlanePoint Cex_Sex(double alpha, const ExCenter& ex, Determination det) {
    const double t = Aex(alpha, ex, det);
    return {std::cos(t), std::sin(t)};
}

double Cex(double alpha, const ExCenter& ex, Determination det) {
    return Cex_Sex(alpha, ex, det).x;
}

double Sex(double alpha, const ExCenter& ex, Determination det) {
    return Cex_Sex(alpha, ex, det).y;
}

double dex(double theta, const ExCenter& ex, Determination det) {
    const double d = delta(theta, ex);
    const double phi = theta - ex.eps;
    if (d <= 0.0) {
        if (std::abs(ex.s) == 1.0 && d == 0.0) {
            // Pole on the circle: dex jumps at the tangency angle; return the
            // right-sided limit of s*cos(phi)/sqrt(delta) -> -s*sign(sin phi).
            return 1.0 + branch_sign(det) * ex.s * std::copysign(1.0, std::sin(phi));
        }
        throw EvalError(EvalError::Kind::domain,
                        "dex: delta(theta) <= 0, derivative unbounded at tangency");
    }
    return 1.0 - ex.s * std::cos(phi) / (branch_sign(det) * std::sqrt(d));
}

double Dex(double alpha, const ExCenter& ex, Determination /*det: no effect*/) {
    const double c = std::cos(alpha - ex.eps);
    const double r2 = 1.0 + ex.s * ex.s - 2.0 * ex.s * c;
    if (r2 == 0.0) {
        throw EvalError(EvalError::Kind::undefined,
                        "Dex: Rex(alpha) = 0, pole on the circle at alpha = eps");
    }
    return (1.0 - ex.s * c) / r2;
}

double tex(double theta, const ExCenter& ex, Determination det) {
    const PlanePoint w = cex_sex(theta, ex, det);
    if (w.x == 0.0) {
        throw EvalError(EvalError::Kind::undefined, "tex: cex(theta) = 0");
    }
    return w.y / w.x;
}

PlanePoint cel_sel(double theta, const ExCenter& ex, Determination det) {
    const double r = rex(theta, ex, det);
    return {r * std::cos(theta), r * std::sin(theta)};
}

double cel(double theta, const ExCenter& ex, Determination det) {
    return cel_sel(theta, ex, det).x;
}

double sel(double theta, const ExCenter& ex, Determination det) {
    return cel_sel(theta, ex, det).y;
}

PlanePoint Cel_Sel(double alpha, const ExCenter& ex, Determination det) {
    const double r = Rex(alpha, ex, det);
    return {r * std::cos(alpha), r * std::sin(alpha)};
}

double Cel(double alpha, const ExCenter& ex, Determination det) {
    return Cel_Sel(alpha, ex, det).x;
}

double Sel(double alpha, const ExCenter& ex, Determination det) {
    return Cel_Sel(alpha, ex, det).y;
}

std::pair<Phasor, Phasor> rad_der(double angle) noexcept {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {Phasor{c, s}, Phasor{-s, c}};
}

PlanePoint w_point(double theta, const ExCenter& ex, Determination det) {
    const PlanePoint s_pt = ex.point();
    const double r = rex(theta, ex, det);
    const Phasor dir = rad_der(theta).first;
    return {s_pt.x + r * dir.x, s_pt.y + r * dir.y};
}

PlanePoint w_velocity(double theta, const ExCenter& ex, Determination det) {
    const double rate = dex(theta, ex, det);
    const Phasor normal = rad_der(aex(theta, ex, det)).second;
    return {rate * normal.x, rate * normal.y};
}

}  // namespace smf
