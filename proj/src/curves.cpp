#include "smf/curves.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "smf/core.hpp"
#include "smf/oracle.hpp"

namespace smf::curves {

namespace {

constexpr double kGapBisectTol = 1e-10;

void require_samples(int n) {
    if (n < 3) {
        throw std::invalid_argument("curve sampling requires n >= 3");
    }
}

void require_radius(double R) {
    if (!(R > 0.0)) {
        throw std::invalid_argument("curve sampling requires R > 0");
    }
}

/// Boundary of a feasibility window, bisected between an infeasible and a
/// feasible parameter until the bracket is below kGapBisectTol; returns the
/// feasible-side endpoint.
template <typename Feasibility>
double bisect_boundary(const Feasibility& feasible, double bad, double good) {
    for (int i = 0; i < 200 && std::abs(good - bad) > kGapBisectTol; ++i) {
        const double mid = 0.5 * (bad + good);
        if (feasible(mid) >= 0.0) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return good;
}

/// Shared gap-aware sampler over the parameter circle. `feasible` must be
/// 2*pi-periodic with the curve defined exactly where it is >= 0; `eval` must
/// accept any parameter at which `feasible` is >= 0.
template <typename Feasibility, typename Eval>
Polyline sample_circle_param(int n, const Feasibility& feasible, const Eval& eval) {
    const double step = two_pi / n;

    std::vector<bool> ok(static_cast<std::size_t>(n));
    bool all = true;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        ok[static_cast<std::size_t>(i)] = feasible(step * i) >= 0.0;
        all = all && ok[static_cast<std::size_t>(i)];
        any = any || ok[static_cast<std::size_t>(i)];
    }

    Polyline out;
    if (!any) {
        return out;
    }
    if (all) {
        PolylineRun run;
        run.closed = true;
        run.samples.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double t = step * i;
            run.samples.push_back({t, eval(t)});
        }
        out.runs.push_back(std::move(run));
        return out;
    }

    for (int i = 0; i < n; ++i) {
        const int prev = (i + n - 1) % n;
        if (!ok[static_cast<std::size_t>(i)] || ok[static_cast<std::size_t>(prev)]) {
            continue;  // not the start of a run
        }

        PolylineRun run;
        const double t_first = step * i;
        const double entry = bisect_boundary(feasible, t_first - step, t_first);
        if (entry < t_first) {
            run.samples.push_back({entry, eval(entry)});
        }

        int len = 0;
        while (len < n && ok[static_cast<std::size_t>((i + len) % n)]) {
            ++len;
        }
        for (int k = 0; k < len; ++k) {
            const double t = step * (i + k);  // continues past 2*pi on wrap
            run.samples.push_back({t, eval(t)});
        }

        const double t_last = step * (i + len - 1);
        const double exit = bisect_boundary(feasible, t_last + step, t_last);
        if (exit > t_last) {
            run.samples.push_back({exit, eval(exit)});
        }

        out.runs.push_back(std::move(run));
    }
    return out;
}

PlanePoint excircle_point(double theta, const ExCenter& ex, double R) {
    const PlanePoint e = ex.point();
    const double r = rex(theta, ex, Determination::first);
    return {R * (e.x + r * std::cos(theta)), R * (e.y + r * std::sin(theta))};
}

}  // namespace

std::size_t Polyline::point_count() const noexcept {
    std::size_t total = 0;
    for (const auto& run : runs) {
        total += run.samples.size();
    }
    return total;
}

Polyline sample_booth(const ExCenter& ex, double R, int n) {
    require_radius(R);
    require_samples(n);
    const double step = two_pi / n;
    PolylineRun run;
    run.closed = true;
    run.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = step * i;
        const double rho = -2.0 * ex.s * R * std::cos(t - ex.eps);
        run.samples.push_back({t, {rho * std::cos(t), rho * std::sin(t)}});
    }
    Polyline out;
    out.runs.push_back(std::move(run));
    return out;
}

Polyline sample_excircle(const ExCenter& ex, double R, int n) {
    if (std::abs(ex.s) > 1.0) {
        throw EvalError(EvalError::Kind::domain, "sample_excircle: |s| <= 1 required");
    }
    require_radius(R);
    require_samples(n);
    const double step = two_pi / n;
    PolylineRun run;
    run.closed = true;
    run.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = step * i;
        run.samples.push_back({t, excircle_point(t, ex, R)});
    }
    Polyline out;
    out.runs.push_back(std::move(run));
    return out;
}

PlanePoint quadrilobe_point(double theta, double s) {
    if (std::abs(s) > 1.0) {
        throw EvalError(EvalError::Kind::domain, "quadrilobe_point: |s| <= 1 required");
    }
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    // The radicands 1 - s^2*sn^2 and 1 - s^2*c^2 cancel catastrophically when
    // the subtrahend approaches 1; rewritten as sums of non-negative terms
    // they keep |x|, |y| <= 1 to the last ulp even at |s| = 1.
    const double k = (1.0 - s) * (1.0 + s);
    const double dx = std::sqrt(c * c + k * sn * sn);
    const double dy = std::sqrt(sn * sn + k * c * c);
    // For |s| = 1 a vanishing denominator co-occurs with a vanishing numerator
    // (|s*sn| resp. |s*c| rounds to 1 only there); the completed 0/0 value is
    // 0 (edge midpoint of the limiting square).
    return {std::abs(s * sn) == 1.0 ? 0.0 : c / dx,
            std::abs(s * c) == 1.0 ? 0.0 : sn / dy};
}

Polyline sample_quadrilobe(double s, int n) {
    if (std::abs(s) > 1.0) {
        throw EvalError(EvalError::Kind::domain, "sample_quadrilobe: |s| <= 1 required");
    }
    require_samples(n);
    const double step = two_pi / n;
    PolylineRun run;
    run.closed = true;
    run.samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = step * i;
        run.samples.push_back({t, quadrilobe_point(t, s)});
    }
    Polyline out;
    out.runs.push_back(std::move(run));
    return out;
}

Polyline sample_elevated(const ExCenter& ex, Determination det, int n) {
    require_samples(n);
    return sample_circle_param(
        n, [&](double t) { return delta(t, ex); },
        [&](double t) { return cel_sel(t, ex, det); });
}

std::vector<PlanePoint> exotic_w_points(double theta, const ExoticConfig& cfg) {
    const auto hits = oracle::line_circle_intersections(cfg.pole, theta, cfg.circle_center, 1.0);
    std::vector<PlanePoint> out;
    out.reserve(static_cast<std::size_t>(hits.count));
    for (int i = 0; i < hits.count; ++i) {
        out.push_back(hits.points[static_cast<std::size_t>(i)]);
    }
    return out;
}

Polyline sample_exotic(const ExoticConfig& cfg, Determination det, int n) {
    require_samples(n);
    const double mx = cfg.pole.x - cfg.circle_center.x;
    const double my = cfg.pole.y - cfg.circle_center.y;
    const double c = mx * mx + my * my - 1.0;
    const auto discriminant = [mx, my, c](double t) {
        const double b = mx * std::cos(t) + my * std::sin(t);
        return b * b - c;
    };
    return sample_circle_param(n, discriminant, [&](double t) {
        const auto hits = oracle::line_circle_intersections(cfg.pole, t, cfg.circle_center, 1.0);
        const int idx = (det == Determination::second && hits.count == 2) ? 1 : 0;
        return hits.points[static_cast<std::size_t>(idx)];
    });
}

Polyline variable_excenter_curve(const std::function<double(double)>& s_of_theta,
                                 const std::function<double(double)>& eps_of_theta,
                                 CurveKind kind, int n, double R, Determination det) {
    if (!s_of_theta || !eps_of_theta) {
        throw std::invalid_argument("variable_excenter_curve: callables must be non-empty");
    }
    require_radius(R);
    require_samples(n);

    const auto ex_at = [&](double t) {
        const double tw = wrap_two_pi(t);
        return ExCenter(s_of_theta(tw), eps_of_theta(tw));
    };

    Polyline out;
    switch (kind) {
        case CurveKind::booth: {
            const double step = two_pi / n;
            PolylineRun run;
            run.samples.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = step * i;
                const ExCenter ex = ex_at(t);
                const double rho = -2.0 * ex.s * R * std::cos(t - ex.eps);
                run.samples.push_back({t, {rho * std::cos(t), rho * std::sin(t)}});
            }
            out.runs.push_back(std::move(run));
            return out;
        }
        case CurveKind::excircle:
            return sample_circle_param(
                n, [&](double t) { return delta(t, ex_at(t)); },
                [&](double t) { return excircle_point(t, ex_at(t), R); });
        case CurveKind::elevated:
            return sample_circle_param(
                n, [&](double t) { return delta(t, ex_at(t)); },
                [&](double t) { return cel_sel(t, ex_at(t), det); });
    }
    throw std::invalid_argument("variable_excenter_curve: unknown curve kind");
}

}  // namespace smf::curves
