#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "smf/angles.hpp"

namespace smf {

/// Selects one of the two intersections of the pole line with the circle:
/// `first` is the branch taken with the positive square root (for |s| <= 1,
/// the point reached along the positive ray from the pole), `second` the
/// opposite one.
enum class Determination { first, second };

/// Sign of the square-root branch a determination selects: +1 or -1.
[[nodiscard]] constexpr double branch_sign(Determination det) noexcept {
    return det == Determination::first ? 1.0 : -1.0;
}

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Unit direction vector (cos a, sin a); only ever built from an angle.
struct Phasor {
    double x = 0.0;
    double y = 0.0;
};

/// Evaluation failure of an ex-centric function.
class EvalError : public std::runtime_error {
  public:
    enum class Kind {
        domain,     ///< input outside the function's domain (the pole line misses the circle)
        undefined,  ///< isolated singular configuration (division by zero at a coincidence)
    };

    EvalError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

/// Ex-center: the pole S sits at polar position (s, eps) relative to the
/// center O of the unit circle. |s| < 1 places S inside the circle, |s| = 1 on
/// it, |s| > 1 outside. eps is normalized to [0, 2*pi) on construction.
struct ExCenter {
    double s = 0.0;
    double eps = 0.0;

    ExCenter() = default;

    ExCenter(double s_in, double eps_in) {
        if (!std::isfinite(s_in) || !std::isfinite(eps_in)) {
            throw std::invalid_argument("ExCenter: s and eps must be finite");
        }
        s = s_in;
        eps = wrap_two_pi(eps_in);
    }

    /// Cartesian position of the pole S.
    [[nodiscard]] PlanePoint point() const noexcept {
        return {s * std::cos(eps), s * std::sin(eps)};
    }
};

}  // namespace smf
