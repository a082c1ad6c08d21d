#include "smf/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace smf::oracle {

IntersectionResult line_circle_intersections(const PlanePoint& pole, double theta,
                                             const PlanePoint& center, double radius) {
    // P(t) = pole + t*u with u = (cos theta, sin theta), |u| = 1:
    //   |P(t) - center|^2 = radius^2   <=>   t^2 + 2*b*t + c = 0
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    const double mx = pole.x - center.x;
    const double my = pole.y - center.y;
    const double b = mx * ux + my * uy;
    const double c = mx * mx + my * my - radius * radius;
    const double disc = b * b - c;

    const double tangency_tol = 1e-12 * std::max(1.0, radius * radius);

    IntersectionResult out;
    const auto point_at = [&](double t) {
        return PlanePoint{pole.x + t * ux, pole.y + t * uy};
    };

    if (disc < -tangency_tol) {
        return out;
    }
    if (disc <= tangency_tol) {
        out.count = 1;
        out.signed_distances[0] = -b;
        out.points[0] = point_at(-b);
        return out;
    }

    // Larger-magnitude root first (no cancellation), the other from t1*t2 = c.
    // |t_big| = |b| + sqrt(disc) > 0 here, since disc > 0 was established.
    const double sq = std::sqrt(disc);
    const double t_big = (b >= 0.0) ? (-b - sq) : (-b + sq);
    const double t_other = c / t_big;

    out.count = 2;
    out.signed_distances[0] = std::max(t_big, t_other);
    out.signed_distances[1] = std::min(t_big, t_other);
    out.points[0] = point_at(out.signed_distances[0]);
    out.points[1] = point_at(out.signed_distances[1]);
    return out;
}

namespace {

IntersectionResult pole_line_hits(double theta, const ExCenter& ex) {
    const auto hits = line_circle_intersections(ex.point(), theta, PlanePoint{0.0, 0.0}, 1.0);
    if (hits.count == 0) {
        throw EvalError(EvalError::Kind::domain,
                        "oracle: the line through S misses the unit circle");
    }
    return hits;
}

int branch_index(const IntersectionResult& hits, Determination det) {
    return (det == Determination::second && hits.count == 2) ? 1 : 0;
}

}  // namespace

double rex(double theta, const ExCenter& ex, Determination det) {
    const auto hits = pole_line_hits(theta, ex);
    return hits.signed_distances[branch_index(hits, det)];
}

double alpha(double theta, const ExCenter& ex, Determination det) {
    const auto hits = pole_line_hits(theta, ex);
    const PlanePoint w = hits.points[branch_index(hits, det)];
    return wrap_two_pi(std::atan2(w.y, w.x));
}

}  // namespace smf::oracle
