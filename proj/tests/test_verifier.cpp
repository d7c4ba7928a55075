#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>

#include "doctest.h"
#include "gband/verifier.hpp"

using namespace gband;

TEST_CASE("check registry") {
    const auto names = check_names();
    CHECK(names.size() == 12);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* expected :
         {"ball_capacity_bound", "capacity_factorization", "determinism",
          "holder_chain", "linear_oracle", "mc_pde_consistency",
          "path_statistics", "rho_identities", "rho_power_law",
          "running_max_polarity", "strict_decrease", "supersolution_envelope"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(run_check("no_such_check", VerifySettings{}),
                    std::invalid_argument);
}

TEST_CASE("a fast check runs and reports coherently") {
    const VerifySettings settings;
    const CheckReport rep = run_check("linear_oracle", settings);
    CHECK(rep.check_name == "linear_oracle");
    CHECK(rep.pass);
    REQUIRE(!rep.labels.empty());
    CHECK(rep.labels.size() == rep.observed.size());
    CHECK(rep.labels.size() == rep.bound_or_target.size());
    CHECK(rep.labels.size() == rep.margin.size());
    // pass iff every margin is nonnegative; worst names the tightest item.
    double worst_margin = rep.margin[0];
    for (double m : rep.margin) {
        CHECK(m >= 0.0);
        worst_margin = std::min(worst_margin, m);
    }
    const auto wi = std::find(rep.margin.begin(), rep.margin.end(), worst_margin);
    REQUIRE(wi != rep.margin.end());
    CHECK(rep.worst == rep.labels[wi - rep.margin.begin()]);
    CHECK(!rep.inputs.empty());
}

TEST_CASE("report serialization is stable and runtime free") {
    const VerifySettings settings;
    auto reps = run_checks({"linear_oracle", "holder_chain"}, settings);
    REQUIRE(reps.size() == 2);
    CHECK(all_pass(reps));

    // Serialization sorts by name and never includes timing.
    std::swap(reps[0], reps[1]);
    const std::string js = reports_to_json(reps);
    CHECK(js.find("runtime") == std::string::npos);
    CHECK(js.find("holder_chain") < js.find("linear_oracle"));
    CHECK(js.find("\"check_name\"") != std::string::npos);
    CHECK(js.find("\"verdict\":\"pass\"") != std::string::npos);

    // Byte-stable across repeated serialization.
    CHECK(reports_to_json(reps) == js);

    // A doctored failing margin flips both the check and the aggregate.
    reps[0].pass = false;
    CHECK_FALSE(all_pass(reps));
}
