#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "smf/angles.hpp"
#include "smf/core.hpp"
#include "smf/mechanisms.hpp"
#include "smf/oracle.hpp"
#include "smf/types.hpp"
#include "support.hpp"

using namespace smf;
using namespace smf::mech;

namespace {
constexpr Determination kFirst = Determination::first;
}

TEST_CASE("stroke at the worked points") {
    CHECK(stroke(0.0, 1.0, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(stroke(pi, 1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(stroke(pi / 2.0, 1.0, 0.5) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
}

TEST_CASE("stroke equals the classical slider-crank displacement") {
    auto rng = testsupport::make_rng();
    for (int i = 0; i < 2000; ++i) {
        const double R = testsupport::uniform(rng, 0.5, 2.0);
        const double e = testsupport::uniform(rng, 0.0, 0.99 * R);
        const double theta = testsupport::random_angle(rng);
        const double classical =
            e * std::cos(theta) + std::sqrt(R * R - e * e * std::sin(theta) * std::sin(theta));
        CHECK(std::abs(stroke(theta, R, e) - classical) <= 1e-10);
    }
}

TEST_CASE("stroke rejects bad geometry") {
    CHECK_THROWS_AS((void)stroke(0.0, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)stroke(0.0, 1.0, -0.1), std::invalid_argument);
    try {
        (void)stroke(pi / 2.0, 1.0, 1.5);  // crank shorter than the eccentricity
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.kind() == EvalError::Kind::domain);
        CHECK(std::string(e.what()).find("stroke") != std::string::npos);
    }
}

TEST_CASE("position transfer function is the radial function") {
    auto rng = testsupport::make_rng();
    for (int i = 0; i < 200; ++i) {
        const ExCenter ex(testsupport::uniform(rng, 0.0, 0.99), testsupport::random_angle(rng));
        const double theta = testsupport::random_angle(rng);
        CHECK(position_transfer(theta, ex, kFirst) == rex(theta, ex, kFirst));
    }
}

TEST_CASE("oscillator validates parameters") {
    CHECK_THROWS_AS((void)simulate_oscillator(ExCenter(1.5, 0.0), 1.0, 1.0, 1.0, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_oscillator(ExCenter(0.5, 0.0), 0.0, 1.0, 1.0, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_oscillator(ExCenter(0.5, 0.0), 1.0, -1.0, 1.0, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_oscillator(ExCenter(0.5, 0.0), 1.0, 1.0, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)simulate_oscillator(ExCenter(0.5, 0.0), 1.0, 1.0, 0.5, 0.6),
                    std::invalid_argument);
}

TEST_CASE("oscillator with s = 0 is uniform rotation") {
    const double Omega = 2.0;
    const auto series = simulate_oscillator(ExCenter(0.0, 0.0), Omega, 1.5, pi, pi / 100.0);
    REQUIRE(series.size() == 101);
    CHECK(series.back().t == doctest::Approx(pi).epsilon(1e-12));
    for (const OscillatorSample& s : series) {
        CHECK(std::abs(s.alpha - Omega * s.t) <= 1e-12);
        CHECK(std::abs(s.omega - Omega) <= 1e-12);
        CHECK(std::abs(s.x - 1.5 * std::cos(Omega * s.t)) <= 1e-12);
        CHECK(std::abs(s.alpha_rk4 - s.alpha) <= 1e-9);
        CHECK(s.theta >= 0.0);
        CHECK(s.theta < two_pi);
    }
}

TEST_CASE("oscillator winds by exactly one turn per period") {
    const double T = two_pi;
    for (const double s : {0.0, 0.5, 1.0}) {
        const auto series = simulate_oscillator(ExCenter(s, 0.0), 1.0, 1.0, T, T / 1e4);
        REQUIRE(series.size() == 10001);
        const double winding = series.back().alpha - series.front().alpha;
        CHECK(std::abs(winding - two_pi) <= 1e-12);
        const double winding_rk4 = series.back().alpha_rk4 - series.front().alpha_rk4;
        CHECK(std::abs(winding_rk4 - two_pi) <= 1e-6);
    }
}

TEST_CASE("oscillator at s = 1 dwells half the period and doubles the peak speed") {
    const double T = two_pi;
    const double dt = T / 1e4;
    const auto series = simulate_oscillator(ExCenter(1.0, 0.0), 1.0, 1.0, T, dt);
    REQUIRE(series.size() == 10001);

    double max_omega = 0.0;
    std::size_t dwell = 0;
    for (const OscillatorSample& s : series) {
        max_omega = std::max(max_omega, s.omega);
        if (s.omega < 1e-9) {
            ++dwell;
            CHECK(std::abs(s.x - 1.0) <= 1e-9);  // parked at (R, 0)
        }
    }
    CHECK(std::abs(max_omega - 2.0) <= 1e-9);
    const double fraction = static_cast<double>(dwell) / static_cast<double>(series.size());
    CHECK(fraction >= 0.5 - 2.0 * dt / T);
    CHECK(fraction <= 0.5 + 2.0 * dt / T);
}

TEST_CASE("sec force at the worked points") {
    CHECK(sec_force(0.5, ExCenter(0.0, 0.0), kFirst) ==
          doctest::Approx(0.5 * std::tan(0.5)).epsilon(1e-14));
    CHECK(sec_force(0.5, ExCenter(0.0, 0.0), kFirst) == doctest::Approx(0.2731).epsilon(1e-3));
    CHECK(sec_force(0.5, ExCenter(0.5, 0.0), kFirst) == doctest::Approx(0.13185).epsilon(2e-4));
}

TEST_CASE("sec force agrees with the oracle angle") {
    auto rng = testsupport::make_rng();
    for (int i = 0; i < 500; ++i) {
        const ExCenter ex(testsupport::uniform(rng, -0.9, 0.9), 0.0);
        const double x = testsupport::uniform(rng, 0.01, pi / 4.0);
        const double via_oracle = x * std::tan(oracle::alpha(x, ex, kFirst));
        CHECK(std::abs(sec_force(x, ex, kFirst) - via_oracle) <= 1e-10);
    }
}

TEST_CASE("sec characteristic sampling") {
    const ExCenter ex(0.5, 0.0);
    const auto points = sec_characteristic(ex, kFirst, pi / 4.0, 9);
    REQUIRE(points.size() == 9);
    CHECK(points.front().x == 0.0);
    CHECK(points.front().force == 0.0);
    CHECK(points.back().x == doctest::Approx(pi / 4.0).epsilon(1e-15));
    for (const SecPoint& p : points) {
        CHECK(p.force == sec_force(p.x, ex, kFirst));
    }
    CHECK_THROWS_AS((void)sec_characteristic(ex, kFirst, 0.0, 9), std::invalid_argument);
    CHECK_THROWS_AS((void)sec_characteristic(ex, kFirst, 1.0, 1), std::invalid_argument);
}
