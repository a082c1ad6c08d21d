#include <cmath>

#include "doctest.h"
#include "smf/angles.hpp"
#include "smf/oracle.hpp"
#include "smf/types.hpp"
#include "support.hpp"

using namespace smf;

TEST_CASE("line through an interior pole hits the unit circle twice") {
    const auto hits =
        oracle::line_circle_intersections({0.5, 0.0}, pi / 2.0, {0.0, 0.0}, 1.0);
    REQUIRE(hits.count == 2);
    // Vertical chord through (0.5, 0): y = +-sqrt(3)/2.
    CHECK(hits.signed_distances[0] == doctest::Approx(0.8660254037844386).epsilon(1e-14));
    CHECK(hits.signed_distances[1] == doctest::Approx(-0.8660254037844386).epsilon(1e-14));
    CHECK(hits.points[0].x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(hits.points[0].y == doctest::Approx(0.8660254037844386).epsilon(1e-14));
    CHECK(hits.points[1].y == doctest::Approx(-0.8660254037844386).epsilon(1e-14));
}

TEST_CASE("line missing the circle reports no intersections") {
    const auto hits =
        oracle::line_circle_intersections({2.0, 0.0}, pi / 2.0, {0.0, 0.0}, 1.0);
    CHECK(hits.count == 0);
}

TEST_CASE("tangent line reports a single touch point") {
    const auto hits =
        oracle::line_circle_intersections({1.0, 0.0}, pi / 2.0, {0.0, 0.0}, 1.0);
    REQUIRE(hits.count == 1);
    CHECK(hits.signed_distances[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hits.points[0].x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hits.points[0].y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("intersection points lie on the circle and are ordered") {
    auto rng = testsupport::make_rng();
    for (int i = 0; i < 2000; ++i) {
        const PlanePoint pole{testsupport::uniform(rng, -0.99, 0.99),
                              testsupport::uniform(rng, -0.99, 0.99)};
        const PlanePoint center{testsupport::uniform(rng, -1.0, 1.0),
                                testsupport::uniform(rng, -1.0, 1.0)};
        const double radius = testsupport::uniform(rng, 0.5, 2.0);
        const double theta = testsupport::random_angle(rng);
        const auto hits = oracle::line_circle_intersections(
            {center.x + pole.x * radius, center.y + pole.y * radius}, theta, center, radius);
        if (hits.count == 0) {
            continue;
        }
        REQUIRE(hits.count >= 1);
        for (int k = 0; k < hits.count; ++k) {
            const double dist = std::hypot(hits.points[static_cast<std::size_t>(k)].x - center.x,
                                           hits.points[static_cast<std::size_t>(k)].y - center.y);
            CHECK(dist == doctest::Approx(radius).epsilon(1e-11));
        }
        if (hits.count == 2) {
            CHECK(hits.signed_distances[0] > hits.signed_distances[1]);
        }
    }
}

TEST_CASE("oracle rex/alpha at the frozen configuration") {
    const ExCenter ex(0.5, 0.0);
    CHECK(oracle::rex(pi / 2.0, ex, Determination::first) ==
          doctest::Approx(0.8660254037844386).epsilon(1e-14));
    CHECK(oracle::rex(pi / 2.0, ex, Determination::second) ==
          doctest::Approx(-0.8660254037844386).epsilon(1e-14));
    CHECK(oracle::alpha(pi / 2.0, ex, Determination::first) ==
          doctest::Approx(pi / 3.0).epsilon(1e-14));
    // Second intersection of the vertical line sits at -pi/3, wrapped.
    CHECK(oracle::alpha(pi / 2.0, ex, Determination::second) ==
          doctest::Approx(two_pi - pi / 3.0).epsilon(1e-14));
}

TEST_CASE("oracle throws when the pole line misses the circle") {
    const ExCenter ex(2.0, 0.0);
    CHECK_THROWS_AS((void)oracle::rex(pi / 2.0, ex, Determination::first), EvalError);
    CHECK_THROWS_AS((void)oracle::alpha(pi / 2.0, ex, Determination::first), EvalError);
}

TEST_CASE("finite differences recover simple derivatives") {
    CHECK(oracle::fd_derivative([](double x) { return std::sin(x); }, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(oracle::fd_derivative([](double x) { return x * x; }, 3.0) ==
          doctest::Approx(6.0).epsilon(1e-9));
}
