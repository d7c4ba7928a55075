#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "doctest.h"
#include "gband/capacity.hpp"

using namespace gband;

namespace {

CapacityParams cheap_params() {
    CapacityParams cp;
    cp.solver.dx = 0.05;
    cp.levels = 2;
    cp.estimate_disc_gap = false;
    cp.base_reg_n = 64;
    return cp;
}

}  // namespace

TEST_CASE("terminal ball: certified bound and degenerate cases") {
    const VolatilityBand band(0.5, 1.0);
    const CapacityParams cp = cheap_params();

    // eps = 0 is the polar level set.
    const auto polar = capacity_terminal_ball(1.0, 0.3, 0.0, band, cp);
    CHECK(polar.value == 0.0);
    REQUIRE(polar.certified_upper_bound.has_value());
    CHECK(*polar.certified_upper_bound == 0.0);

    // Bound arithmetic: exp(1/2) eps^{2 alpha} / t^alpha at eps=0.1, t=1.
    const auto small = capacity_terminal_ball(1.0, 0.0, 0.1, band, cp);
    REQUIRE(small.certified_upper_bound.has_value());
    CHECK(*small.certified_upper_bound ==
          doctest::Approx(std::exp(0.5) * std::sqrt(0.1)));
    CHECK(small.value <=
          *small.certified_upper_bound + small.combined_gap() + 1e-12);
    CHECK(small.value > 0.0);
    CHECK(small.method == CapacityMethod::PdeRegularized);

    // A huge ball captures nearly all mass.
    const auto big = capacity_terminal_ball(0.5, 0.0, 3.0, band, cp);
    CHECK(big.value > 0.9);
    CHECK(big.value < 1.0 + 1e-9);

    // No certified bound without the normalization.
    const auto wide = capacity_terminal_ball(1.0, 0.0, 0.1,
                                             VolatilityBand(0.5, 2.0), cp);
    CHECK_FALSE(wide.certified_upper_bound.has_value());

    CHECK_THROWS_AS(capacity_terminal_ball(0.0, 0.0, 0.1, band, cp),
                    std::invalid_argument);
    CHECK_THROWS_AS(capacity_terminal_ball(1.0, 0.0, -0.1, band, cp),
                    std::invalid_argument);
}

TEST_CASE("terminal half-line against the degenerate closed form") {
    const VolatilityBand band(1.0, 1.0);
    CapacityParams cp = cheap_params();
    cp.solver.dx = 0.02;
    // Regularization levels are base_reg_n * 4^j = {64, 256}; the linear
    // value of the last level is 1/2 + (1/2)(2 * 256 + 1)^{-1/2}.
    const auto closed = capacity_terminal_halfline(1.0, 0.0, false, band, cp);
    CHECK(closed.value ==
          doctest::Approx(0.5 + 0.5 / std::sqrt(513.0)).epsilon(3e-3));
    CHECK(closed.regularization_gap == doctest::Approx(std::pow(256.0, -0.5)));
    CHECK(closed.method == CapacityMethod::PdeRegularized);

    // The open half-line approaches the same capacity from below.
    const auto open = capacity_terminal_halfline(1.0, 0.0, true, band, cp);
    CHECK(open.value > 0.4);
    CHECK(open.value < closed.value + 1e-6);

    CHECK_THROWS_AS(capacity_terminal_halfline(0.0, 0.0, false, band, cp),
                    std::invalid_argument);
}

TEST_CASE("running max: bounds, lattice guard, validation") {
    const VolatilityBand band(0.5, 1.0);
    CapacityParams cp = cheap_params();
    cp.force_dx = 0.05;

    const auto est = capacity_running_max(0.25, 0.2, band, cp);
    REQUIRE(est.certified_upper_bound.has_value());
    CHECK(*est.certified_upper_bound ==
          doctest::Approx(std::erf(0.2 / std::sqrt(2.0 * 0.5 * 0.25))));
    CHECK(est.value > 0.0);
    CHECK(est.value <= *est.certified_upper_bound + est.combined_gap() + 1e-12);
    CHECK(est.method == CapacityMethod::DpAugmented);
    // Certified regularization allowance from the reflection bound.
    const double scale = std::sqrt(2.0 * 0.5 * 0.25);
    CHECK(est.regularization_gap >=
          std::erf((0.2 + 4.0 * 0.05) / scale) - std::erf(0.2 / scale) - 1e-15);

    CHECK_THROWS_WITH_AS(capacity_running_max(0.25, 0.1, band, cp),
                         doctest::Contains("fewer than 4"),
                         std::invalid_argument);
    CHECK_THROWS_AS(capacity_running_max(0.0, 0.2, band, cp),
                    std::invalid_argument);
    CHECK_THROWS_AS(capacity_running_max(0.25, -0.1, band, cp),
                    std::invalid_argument);
}

TEST_CASE("two-stage factorization is structural at fixed regularization") {
    const VolatilityBand band(0.5, 1.0);
    const CapacityParams cp = cheap_params();
    const Interval set{-0.5, 0.5};
    const auto pc = capacity_product_check(0.25, 0.25, set, true, band, cp);
    // Backward composition makes lhs = rhs up to rounding at any fixed level.
    CHECK(std::abs(pc.lhs - pc.rhs) <= 1e-6);
    CHECK(pc.lhs > 0.0);
    CHECK(pc.lhs < 1.0);
    const auto pcc = capacity_product_check(0.25, 0.25, set, false, band, cp);
    CHECK(std::abs(pcc.lhs - pcc.rhs) <= 1e-6);
    CHECK(pcc.lhs >= pc.lhs - 1e-9);  // closed set dominates the open one
    CHECK_THROWS_AS(capacity_product_check(0.0, 1.0, set, true, band, cp),
                    std::invalid_argument);
}

TEST_CASE("monotone event: staging matches the matched single increment") {
    const VolatilityBand band(0.5, 1.0);
    CapacityParams cp = cheap_params();
    cp.solver.dx = 0.01;
    const auto one = capacity_monotone_event(1, band, cp);
    // One stage is exactly the single-increment value.
    CHECK(one.estimate.value == one.rho_single);
    CHECK(one.rho_power == one.rho_single);
    CHECK(one.rho_single > 0.5);
    CHECK(one.rho_single < 1.0);
    CHECK_THROWS_AS(capacity_monotone_event(0, band, cp),
                    std::invalid_argument);
    CHECK_THROWS_AS(capacity_monotone_event(7, band, cp),
                    std::invalid_argument);
}

TEST_CASE("chain length l") {
    const VolatilityBand half(0.5, 1.0);
    const VolatilityBand unit(1.0, 1.0);
    CHECK(holder_chain_l(0.75, half) == 9);
    CHECK(holder_chain_l(0.6, half) == 21);
    CHECK(holder_chain_l(0.75, unit) == 5);
    CHECK_THROWS_AS(holder_chain_l(0.5, half), std::invalid_argument);
    CHECK_THROWS_AS(holder_chain_l(0.75, VolatilityBand(0.5, 2.0)),
                    std::invalid_argument);
}

TEST_CASE("chain bound sequence") {
    const VolatilityBand band(0.5, 1.0);
    // Before the crossover the bound term is just n, so a short list that
    // stays there never decreases and is rejected.
    CHECK_THROWS_AS(holder_chain_bound(0.75, 1.0, band, {10.0, 100.0}),
                    std::runtime_error);

    const std::vector<double> ns{1e6, 1e8, 1e10};
    const auto terms = holder_chain_bound(0.75, 1.0, band, ns);
    REQUIRE(terms.size() == 3);
    CHECK(terms[1] < terms[0]);
    CHECK(terms[2] < terms[1]);
    // Direct formula at n = 1e6 with l = 9.
    const double u =
        std::exp(0.5) * std::pow(2.0 * std::pow(9.0, 0.75), 0.5) /
        std::pow(1e6, 0.125);
    CHECK(terms[0] == doctest::Approx(1e6 * std::pow(std::min(1.0, u), 9)));
    // log10-space evaluation agrees with the direct term.
    CHECK(holder_chain_log10_term(0.75, 1.0, band, 6.0) ==
          doctest::Approx(std::log10(terms[0])).epsilon(1e-12));
}

TEST_CASE("first decade below a threshold") {
    const VolatilityBand band(0.5, 1.0);
    const double x = holder_chain_first_log10_n_below(0.75, 1.0, band, 1e-6);
    CHECK(holder_chain_log10_term(0.75, 1.0, band, x) < -6.0);
    CHECK(holder_chain_log10_term(0.75, 1.0, band, x - 1.0) >= -6.0);
    // Far beyond double range is still finite and ordered.
    const double y = holder_chain_first_log10_n_below(0.6, 1.0, band, 1e-6);
    CHECK(y > x);
    CHECK(std::isfinite(holder_chain_log10_term(0.6, 1.0, band, 400.0)));
}

TEST_CASE("event descriptors and method names") {
    CHECK(std::string(to_string(CapacityMethod::PdeRegularized)) ==
          "pde_regularized");
    CHECK(std::string(to_string(CapacityMethod::DpAugmented)) == "dp_augmented");
    CHECK(std::string(to_string(CapacityMethod::ProductFormula)) ==
          "product_formula");
    EventDescriptor ev;
    ev.kind = EventDescriptor::Kind::RunningMaxLeq;
    ev.t = 1.0;
    ev.eps = 0.05;
    CHECK(ev.describe() == "running_max_leq(t=1,eps=0.05)");
}
