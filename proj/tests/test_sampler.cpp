#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "doctest.h"
#include "gband/sampler.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gband;

namespace {

std::string ensemble_bytes(const PathEnsemble& e) {
    std::ostringstream os;
    e.write_binary(os);
    return os.str();
}

}  // namespace

TEST_CASE("ensembles are reproducible and thread-count independent") {
    const VolatilityBand band(0.5, 1.0);
    const auto policy = ControlPolicy::constant(1.0);
    const auto a = sample_paths(policy, band, 0.01, 1.0, 32, 42);
    const auto b = sample_paths(policy, band, 0.01, 1.0, 32, 42);
    CHECK(ensemble_bytes(a) == ensemble_bytes(b));

    const auto c = sample_paths(policy, band, 0.01, 1.0, 32, 43);
    CHECK(ensemble_bytes(a) != ensemble_bytes(c));

#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto t1 = sample_paths(policy, band, 0.01, 1.0, 32, 42);
    omp_set_num_threads(4);
    const auto t4 = sample_paths(policy, band, 0.01, 1.0, 32, 42);
    omp_set_num_threads(saved);
    CHECK(ensemble_bytes(t1) == ensemble_bytes(t4));
#endif
}

TEST_CASE("binary layout") {
    const VolatilityBand band(1.0, 1.0);
    const auto e = sample_paths(ControlPolicy::constant(1.0), band, 0.5, 1.0,
                                3, 7);
    const std::string s = ensemble_bytes(e);
    REQUIRE(s.size() == 4 + 8 + 8 + 8 + 3 * 3 * 8);
    CHECK(s.compare(0, 4, "GBM1") == 0);
    double dt = 0.0, horizon = 0.0;
    uint64_t count = 0;
    std::memcpy(&dt, s.data() + 4, 8);
    std::memcpy(&horizon, s.data() + 12, 8);
    std::memcpy(&count, s.data() + 20, 8);
    CHECK(dt == 0.5);
    CHECK(horizon == 1.0);
    CHECK(count == 3);
    double first = 0.0;
    std::memcpy(&first, s.data() + 28, 8);
    CHECK(first == e.at(0, 0));
}

TEST_CASE("CSV layout") {
    const VolatilityBand band(1.0, 1.0);
    const auto e = sample_paths(ControlPolicy::constant(1.0), band, 0.5, 1.0,
                                2, 7);
    std::ostringstream os;
    e.write_csv(os);
    const std::string s = os.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 2);
    CHECK(std::count(s.begin(), s.end(), ',') == 2 * 2);
    CHECK(s.rfind("0,", 0) == 0);  // every path starts at the origin
}

TEST_CASE("terminal variance matches sigma_sq * horizon") {
    const VolatilityBand band(0.25, 1.0);
    const auto policy = ControlPolicy::constant(0.25);
    const auto vals =
        sample_terminal_values(policy, band, 0.01, 2.0, 4000, 42);
    double sum = 0.0, ss = 0.0;
    for (double v : vals) sum += v;
    const double mean = sum / vals.size();
    for (double v : vals) ss += (v - mean) * (v - mean);
    const double var = ss / (vals.size() - 1);
    // Var = sigma_sq * horizon = 0.5; the sample variance of 4000 draws has
    // std error about var * sqrt(2/n) ~ 0.011.
    CHECK(var == doctest::Approx(0.5).epsilon(0.07));
    CHECK(std::abs(mean) < 5.0 * std::sqrt(0.5 / 4000.0));
}

TEST_CASE("reduced sampling matches the stored ensemble") {
    const VolatilityBand band(0.5, 1.0);
    const auto policy = ControlPolicy::constant(0.75);
    const auto e = sample_paths(policy, band, 0.02, 1.0, 16, 9);
    const auto terminal =
        sample_terminal_values(policy, band, 0.02, 1.0, 16, 9);
    const auto running = sample_running_max(policy, band, 0.02, 1.0, 16, 9);
    REQUIRE(terminal.size() == 16);
    for (int p = 0; p < 16; ++p) {
        CHECK(terminal[p] == e.at(p, e.steps()));
        double m = 0.0;
        for (int k = 0; k <= e.steps(); ++k) m = std::max(m, e.at(p, k));
        CHECK(running[p] == m);
    }
}

TEST_CASE("argument validation") {
    const VolatilityBand band(0.5, 1.0);
    const auto policy = ControlPolicy::constant(1.0);
    CHECK_THROWS_AS(sample_paths(policy, band, 0.0, 1.0, 8, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_paths(policy, band, 0.01, 0.0, 8, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_paths(policy, band, 0.01, 1.0, 0, 1),
                    std::invalid_argument);
    // Policy outside the band is rejected before any sampling.
    CHECK_THROWS_AS(sample_paths(ControlPolicy::constant(2.0), band, 0.01,
                                 1.0, 8, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(mc_mean({}), std::invalid_argument);
}

TEST_CASE("mc_mean and mc_expectation") {
    const auto r = mc_mean({1.0, 2.0, 3.0, 4.0});
    CHECK(r.mean == doctest::Approx(2.5));
    // Sample sd sqrt(5/3) over sqrt(4).
    CHECK(r.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));

    const VolatilityBand band(1.0, 1.0);
    const auto e = sample_paths(ControlPolicy::constant(1.0), band, 0.01, 1.0,
                                64, 11);
    const auto payoff = TerminalPayoff::gaussian_bump(4.0, 0.0);
    const auto m = mc_expectation(e, payoff);
    std::vector<double> by_hand(64);
    for (int p = 0; p < 64; ++p) by_hand[p] = payoff(e.at(p, e.steps()));
    const auto h = mc_mean(by_hand);
    CHECK(m.mean == h.mean);
    CHECK(m.std_error == h.std_error);
}

TEST_CASE("path statistics report") {
    const VolatilityBand band(1.0, 1.0);
    const auto e = sample_paths(ControlPolicy::constant(1.0), band, 1e-3, 1.0,
                                64, 42);
    StatSpec spec;
    const auto rep = path_statistics(e, spec);

    CHECK(rep.get("count") == 64);
    CHECK(rep.get("steps") == 1000);
    CHECK(rep.get("dt") == doctest::Approx(1e-3));
    CHECK(rep.get("horizon") == 1.0);
    // A fresh Gaussian increment beats both neighbours a quarter of the time.
    CHECK(rep.get("local_maxima_fraction") ==
          doctest::Approx(0.25).epsilon(0.1));
    CHECK(rep.get("monotone_window_prob_w5_expected") ==
          doctest::Approx(std::pow(2.0, -4.0)));
    CHECK(rep.get("monotone_window_prob_w10_expected") ==
          doctest::Approx(std::pow(2.0, -9.0)));
    CHECK(rep.get("monotone_window_prob_w5") ==
          doctest::Approx(std::pow(2.0, -4.0)).epsilon(0.35));
    CHECK(rep.get("holder_ratio_g0.4_min") > 0.0);
    CHECK(rep.get("holder_ratio_g0.75_max") >=
          rep.get("holder_ratio_g0.75_min"));
    CHECK(rep.get("occupation_time_eps0.1") > 0.0);
    CHECK(rep.get("terminal_variance") == doctest::Approx(1.0).epsilon(0.6));
    CHECK(rep.get("longest_monotone_run_steps") >= 5);
    CHECK_THROWS_AS(rep.get("no_such_key"), std::out_of_range);

    // Stable JSON with every key present.
    const std::string js = rep.to_json();
    CHECK(js.find("\"local_maxima_fraction\":") != std::string::npos);
    CHECK(js.find("\"terminal_variance_stderr\":") != std::string::npos);
    CHECK(js == rep.to_json());
}
