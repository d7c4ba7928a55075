#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "gband/config.hpp"

using namespace gband;

TEST_CASE("parsing key=value lines") {
    const std::string text =
        "# heading comment\n"
        "band.lo_sq = 0.5\n"
        "\n"
        "band.hi_sq=1.0   # trailing comment\n"
        "  payoff.kind =  gaussian_bump  \n";
    const Config cfg = Config::parse_text(text, "demo.cfg");
    CHECK(cfg.entries().size() == 3);
    CHECK(cfg.get("band.lo_sq", "") == "0.5");
    CHECK(cfg.get("band.hi_sq", "") == "1.0");
    CHECK(cfg.get("payoff.kind", "") == "gaussian_bump");
    CHECK(cfg.get("missing", "fallback") == "fallback");
    CHECK(cfg.has("band.lo_sq"));
    CHECK_FALSE(cfg.has("missing"));
}

TEST_CASE("parse errors carry the source name and line number") {
    CHECK_THROWS_WITH_AS(Config::parse_text("a = 1\nnonsense\n", "f.cfg"),
                         doctest::Contains("f.cfg:2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Config::parse_text("= 1\n", "f.cfg"),
                         doctest::Contains("f.cfg:1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Config::parse_text("k = 1\nk = 2\n", "f.cfg"),
                         doctest::Contains("duplicate key"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Config::parse_file("/no/such/file.cfg"),
                         doctest::Contains("cannot open"),
                         std::invalid_argument);
}

TEST_CASE("typed getters validate strictly") {
    Config cfg;
    cfg.set("x", "1.5");
    cfg.set("n", "42");
    cfg.set("flag", "true");
    cfg.set("bad", "1.5abc");
    CHECK(cfg.get_num("x", 0.0) == 1.5);
    CHECK(cfg.get_num("missing", 9.0) == 9.0);
    CHECK(cfg.get_int("n", 0) == 42);
    CHECK(cfg.get_u64("n", 0) == 42);
    CHECK(cfg.get_bool("flag", false));
    CHECK(cfg.get_bool("missing", true));
    CHECK_THROWS_AS(cfg.get_num("bad", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cfg.get_bool("x", false), std::invalid_argument);
}

TEST_CASE("CLI overrides") {
    Config cfg;
    cfg.set_pair("solver.dx=0.01");
    cfg.set_pair(" sample.count = 100 ");
    CHECK(cfg.get_num("solver.dx", 0.0) == 0.01);
    CHECK(cfg.get_int("sample.count", 0) == 100);
    CHECK_THROWS_AS(cfg.set_pair("no-equals"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.set_pair("=value"), std::invalid_argument);
    // Overrides replace earlier values without the duplicate-key error.
    cfg.set_pair("solver.dx=0.02");
    CHECK(cfg.get_num("solver.dx", 0.0) == 0.02);
}

TEST_CASE("canonical form and hash are order independent") {
    Config a, b;
    a.set("z", "1");
    a.set("a", "2");
    b.set("a", "2");
    b.set("z", "1");
    CHECK(a.canonical() == "a = 2\nz = 1\n");
    CHECK(a.canonical() == b.canonical());
    CHECK(a.hash() == b.hash());
    CHECK(a.hash_hex().size() == 16);

    // Round trip through the canonical text preserves the hash.
    const Config c = Config::parse_text(a.canonical(), "round");
    CHECK(c.hash() == a.hash());

    b.set("a", "3");
    CHECK(a.hash() != b.hash());

    // Empty config hashes to the FNV-1a offset basis.
    CHECK(Config().hash() == 1469598103934665603ull);
}
