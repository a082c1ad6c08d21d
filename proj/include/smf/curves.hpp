#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "smf/types.hpp"

/// Plane-curve samplers built on the ex-centric functions.
///
/// All samplers walk the uniform grid theta_i = i*(2*pi/n), i = 0..n-1
/// (endpoint excluded). Where a curve is undefined on part of the grid
/// (delta < 0), the output splits into runs: gap boundaries are located by
/// bisection on delta's sign change to 1e-10 in theta and the feasible-side
/// boundary sample is included at the run ends. A feasible arc crossing
/// theta = 0 is stitched into a single run whose theta parameter continues
/// monotonically past 2*pi (or starts slightly below 0 at a bisected entry),
/// so theta strictly increases within every run.
namespace smf::curves {

/// One sampled point of a parametric curve.
struct CurveSample {
    double theta = 0.0;
    PlanePoint point{};
};

/// Maximal gap-free stretch of a sampled curve.
struct PolylineRun {
    std::vector<CurveSample> samples;
    bool closed = false;  ///< true iff the run covers the whole parameter circle
};

struct Polyline {
    std::vector<PolylineRun> runs;

    [[nodiscard]] std::size_t point_count() const noexcept;
};

/// Booth-lemniscate polar curve rho(theta) = -2*s*R*cos(theta - eps), sampled
/// as (rho*cos theta, rho*sin theta). Total for every s; one closed run.
/// Requires R > 0, n >= 3.
[[nodiscard]] Polyline sample_booth(const ExCenter& ex, double R, int n);

/// Circle of radius R centered at O drawn from the moved pole
/// E = R*s*(cos eps, sin eps): points E + R*rex1(theta)*rad(theta).
/// Every sample lies on the radius-R circle. Requires |s| <= 1
/// (EvalError{domain} otherwise), R > 0, n >= 3.
[[nodiscard]] Polyline sample_excircle(const ExCenter& ex, double R, int n);

/// Quadrilobe point
///   x = cos theta / sqrt(1 - s^2*sin^2 theta),
///   y = sin theta / sqrt(1 - s^2*cos^2 theta).
/// Interpolates between the unit circle (s = 0) and the circumscribed square
/// (|s| = 1). Requires |s| <= 1 (EvalError{domain} otherwise). At |s| = 1 the
/// vanishing denominators are 0/0 forms completed with 0, which places the
/// cardinal samples on the square's edge midpoints.
[[nodiscard]] PlanePoint quadrilobe_point(double theta, double s);

/// Quadrilobe sampled on the uniform grid; one closed run. |s| <= 1, n >= 3.
[[nodiscard]] Polyline sample_quadrilobe(double s, int n);

/// Elevated curve (cel theta, sel theta) = rex(theta)*(cos theta, sin theta).
/// Splits into runs where delta < 0 (|s| > 1). n >= 3.
[[nodiscard]] Polyline sample_elevated(const ExCenter& ex, Determination det, int n);

/// Exotic configuration: rays leave the pole S while the unit circle is
/// centered at C, generally different from both O and S.
struct ExoticConfig {
    PlanePoint pole{};           ///< S, origin of the theta-directed rays
    PlanePoint circle_center{};  ///< C; the circle radius is fixed at 1
};

/// Intersections of the theta-directed line through S with the unit circle
/// centered at C, ordered by decreasing signed distance from S (0, 1 or 2
/// points). With C = O this reduces to the ex-centric W points.
[[nodiscard]] std::vector<PlanePoint> exotic_w_points(double theta, const ExoticConfig& cfg);

/// Exotic curve of the selected determination, gap-split where the line
/// misses the circle. n >= 3.
[[nodiscard]] Polyline sample_exotic(const ExoticConfig& cfg, Determination det, int n);

/// Curve family selector for variable_excenter_curve.
enum class CurveKind { booth, excircle, elevated };

/// Samples a curve family whose ex-center varies with theta:
/// ex(theta) = (s_of_theta(theta), eps_of_theta(theta)), callables evaluated
/// at the wrapped angle in [0, 2*pi). Gaps (delta < 0 under the varying
/// ex-center) split runs as usual. Runs are never marked closed: the sampler
/// cannot assume the callables are periodic (s(theta) = theta/2pi yields an
/// open spiral). The excircle family uses the first determination, matching
/// sample_excircle; det applies to the elevated family.
[[nodiscard]] Polyline variable_excenter_curve(const std::function<double(double)>& s_of_theta,
                                               const std::function<double(double)>& eps_of_theta,
                                               CurveKind kind, int n, double R = 1.0,
                                               Determination det = Determination::first);

}  // namespace smf::curves
