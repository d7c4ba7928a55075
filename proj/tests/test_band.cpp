#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gband/band.hpp"

using namespace gband;

TEST_CASE("band construction validates the interval") {
    CHECK_THROWS_AS(VolatilityBand(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VolatilityBand(-0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(VolatilityBand(1.5, 1.0), std::invalid_argument);
    CHECK_NOTHROW(VolatilityBand(1.0, 1.0));
    CHECK(VolatilityBand(1.0, 1.0).is_degenerate());
    CHECK_FALSE(VolatilityBand(0.5, 1.0).is_degenerate());
    CHECK(VolatilityBand(0.5, 1.0).is_normalized());
    CHECK_FALSE(VolatilityBand(0.5, 2.0).is_normalized());
    CHECK_THROWS_AS(VolatilityBand(0.5, 2.0).require_normalized("here"),
                    std::invalid_argument);
}

TEST_CASE("generator values") {
    const VolatilityBand band(0.25, 1.0);
    CHECK(g_value(2.0, band) == doctest::Approx(1.0));
    CHECK(g_value(-2.0, band) == doctest::Approx(-0.25));
    CHECK(g_value(0.0, band) == 0.0);
    // Positive homogeneity and monotonicity.
    CHECK(g_value(3.0 * 1.7, band) == doctest::Approx(3.0 * g_value(1.7, band)));
    CHECK(g_value(-1.0, band) < g_value(1.0, band));
    // Subadditivity at a sign change.
    CHECK(g_value(1.0 - 2.0, band) <=
          g_value(1.0, band) + g_value(-2.0, band) + 1e-15);
}

TEST_CASE("alpha exponent") {
    CHECK(alpha_exponent(VolatilityBand(0.5, 1.0)) == doctest::Approx(0.25));
    CHECK(alpha_exponent(VolatilityBand(1.0, 1.0)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(alpha_exponent(VolatilityBand(0.5, 2.0)),
                    std::invalid_argument);
}

TEST_CASE("supersolution closed form") {
    const VolatilityBand band(0.5, 1.0);
    const double n = 10.0, a = 0.3;
    // t = 0 reduces to the initial bump.
    CHECK(supersolution_v(n, a, band, 0.0, 0.7) ==
          doctest::Approx(std::exp(-n * 0.16 / 2.0)));
    // Explicit point: t = 1, x = a.
    CHECK(supersolution_v(n, a, band, 1.0, a) ==
          doctest::Approx(std::pow(11.0, -0.25)));
    // Decreasing in t at the center, symmetric about a.
    CHECK(supersolution_v(n, a, band, 0.5, a) >
          supersolution_v(n, a, band, 1.0, a));
    CHECK(supersolution_v(n, a, band, 1.0, a + 0.4) ==
          doctest::Approx(supersolution_v(n, a, band, 1.0, a - 0.4)));
}

TEST_CASE("linear gaussian solution") {
    // At sigma_sq matching a degenerate band, the supersolution with
    // alpha = 1/2 coincides with the linear solution.
    const VolatilityBand unit(1.0, 1.0);
    const double n = 4.0, a = 0.0, t = 0.5, x = 0.2;
    CHECK(linear_gaussian_solution(n, a, 1.0, t, x) ==
          doctest::Approx(supersolution_v(n, a, unit, t, x)));
    // Quoted value: n = 4, t = 0.5, x = a: (n sigma^2 t + 1)^{-1/2} = 3^{-1/2}.
    CHECK(linear_gaussian_solution(4.0, 0.0, 1.0, 0.5, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(3.0)));
    // Slower spread for smaller sigma_sq.
    CHECK(linear_gaussian_solution(n, a, 0.25, t, 0.0) >
          linear_gaussian_solution(n, a, 1.0, t, 0.0));
}
