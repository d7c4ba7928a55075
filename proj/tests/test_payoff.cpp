#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "doctest.h"
#include "gband/payoff.hpp"

using namespace gband;

static const double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("gaussian bump") {
    const auto p = TerminalPayoff::gaussian_bump(4.0, 1.0);
    CHECK(p(1.0) == 1.0);
    CHECK(p(1.5) == doctest::Approx(std::exp(-4.0 * 0.25 / 2.0)));
    CHECK(p(0.5) == doctest::Approx(p(1.5)));
    CHECK(p.min_value() == 0.0);
    CHECK(p.max_value() == 1.0);
    CHECK(p.describe() == "gaussian_bump(n=4,a=1)");
    // feature_radius: payoff below tol outside it.
    const double r = p.feature_radius(1e-3);
    CHECK(p(1.0 + r) <= 1e-3 * 1.0000001);
}

TEST_CASE("regularized half-line indicator") {
    const auto p = TerminalPayoff::indicator_leq_reg(64);
    CHECK(p(-2.0) == 1.0);
    CHECK(p(0.0) == 1.0);
    CHECK(p(0.25) == doctest::Approx(std::exp(-64.0 * 0.0625)));
    // Nonincreasing in x; nonincreasing in n on x > 0.
    CHECK(p(0.1) >= p(0.2));
    const auto q = TerminalPayoff::indicator_leq_reg(256);
    CHECK(q(0.1) <= p(0.1));
    CHECK(q(-1.0) == p(-1.0));
    CHECK_THROWS_AS(TerminalPayoff::indicator_leq_reg(0), std::invalid_argument);
}

TEST_CASE("distance regularizer of an open set") {
    const std::vector<Interval> set{{-1.0, 1.0}};
    const auto p = TerminalPayoff::distance_reg(10, set);
    CHECK(p(2.0) == 0.0);   // outside
    CHECK(p(1.0) == 0.0);   // boundary
    CHECK(p(0.5) == doctest::Approx(10.0 * 0.5 / (1.0 + 10.0 * 0.5)));
    CHECK(p(0.0) == doctest::Approx(10.0 / 11.0));
    // Increases toward the indicator as n grows.
    const auto q = TerminalPayoff::distance_reg(100, set);
    CHECK(q(0.5) > p(0.5));
    CHECK(q(0.5) < 1.0);
    // Half-line via infinite endpoint.
    const auto h = TerminalPayoff::distance_reg(10, {{-kInf, 0.0}});
    CHECK(h(-1e6) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(h(0.5) == 0.0);
}

TEST_CASE("distance helpers") {
    const std::vector<Interval> set{{-1.0, 1.0}, {2.0, 3.0}};
    CHECK(distance_to_complement(0.0, set) == doctest::Approx(1.0));
    CHECK(distance_to_complement(0.9, set) == doctest::Approx(0.1));
    CHECK(distance_to_complement(1.5, set) == 0.0);
    CHECK(distance_to_complement(2.4, set) == doctest::Approx(0.4));
    CHECK(distance_to_set(0.0, set) == 0.0);
    CHECK(distance_to_set(1.5, set) == doctest::Approx(0.5));
    CHECK(distance_to_set(5.0, set) == doctest::Approx(2.0));
    CHECK(distance_to_complement(0.0, {{-kInf, kInf}}) == kInf);
}

TEST_CASE("ball bump") {
    const auto p = TerminalPayoff::ball_bump(8.0, 0.5, 0.2);
    CHECK(p(0.5) == 1.0);
    CHECK(p(0.7) == 1.0);   // on the ball boundary
    CHECK(p(0.3) == 1.0);
    CHECK(p(1.0) == doctest::Approx(std::exp(-8.0 * (0.25 - 0.04) / 2.0)));
    // Decreasing in n outside the ball, constant 1 inside.
    const auto q = TerminalPayoff::ball_bump(32.0, 0.5, 0.2);
    CHECK(q(1.0) < p(1.0));
    CHECK(q(0.6) == 1.0);
    // radius 0 reduces to a gaussian bump.
    const auto z = TerminalPayoff::ball_bump(8.0, 0.0, 0.0);
    const auto g = TerminalPayoff::gaussian_bump(8.0, 0.0);
    CHECK(z(0.7) == doctest::Approx(g(0.7)));
}

TEST_CASE("constant payoff") {
    const auto p = TerminalPayoff::constant(0.75);
    CHECK(p(-100.0) == 0.75);
    CHECK(p(3.0) == 0.75);
    CHECK(p.min_value() == 0.75);
    CHECK(p.max_value() == 0.75);
    CHECK(p.feature_radius(1e-3) == 0.0);
}

TEST_CASE("feature radius is conservative") {
    const double tol = 1e-3;
    for (const auto& p : {TerminalPayoff::gaussian_bump(4.0, 0.0),
                          TerminalPayoff::ball_bump(16.0, 0.0, 0.3)}) {
        const double r = p.feature_radius(tol);
        CHECK(r > 0.0);
        // Payoff is essentially flat beyond the radius.
        CHECK(std::abs(p(r) - p(r + 10.0)) <= tol * 1.0000001);
    }
}
