// Command-line front end: solves, capacities, sampling, statistics, and the
// verification suite, all driven by a flat key=value config whose hash is
// embedded in every artifact.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "gband/band.hpp"
#include "gband/capacity.hpp"
#include "gband/config.hpp"
#include "gband/payoff.hpp"
#include "gband/policy.hpp"
#include "gband/sampler.hpp"
#include "gband/solver.hpp"
#include "gband/verifier.hpp"

namespace {

using namespace gband;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Config defaults_for(const std::string& sub) {
    Config c;
    c.set("seed", "42");
    c.set("threads", "0");
    if (sub == "solve" || sub == "capacity" || sub == "sample") {
        c.set("band.lo_sq", "0.5");
        c.set("band.hi_sq", "1");
        c.set("solver.dx", "0.005");
        c.set("solver.cfl_fraction", "1");
    }
    if (sub == "solve" || sub == "sample") {
        c.set("payoff.kind", "gaussian_bump");
        c.set("payoff.n", "4");
        c.set("payoff.a", "0");
        c.set("payoff.radius", "0.1");
        c.set("payoff.c", "1");
        c.set("payoff.set_lo", "0");
        c.set("payoff.set_hi", "inf");
        c.set("horizon", "1");
    }
    if (sub == "capacity") {
        c.set("event.kind", "terminal_ball");
        c.set("event.t", "1");
        c.set("event.s", "1");
        c.set("event.a", "0");
        c.set("event.eps", "0.1");
        c.set("event.open", "true");
        c.set("event.n", "2");
        c.set("event.set_lo", "0");
        c.set("event.set_hi", "inf");
        c.set("capacity.levels", "3");
        c.set("capacity.base_reg_n", "256");
        c.set("capacity.force_dx", "0");
        c.set("capacity.disc_gap", "true");
    }
    if (sub == "sample") {
        c.set("policy.kind", "constant");
        c.set("policy.sigma_sq", "1");
        c.set("sample.dt", "0.001");
        c.set("sample.count", "1000");
    }
    if (sub == "holder") {
        c.set("band.lo_sq", "0.5");
        c.set("band.hi_sq", "1");
        c.set("holder.gamma", "0.75");
        c.set("holder.beta", "1");
        c.set("holder.n_list", "1e2,1e4,1e6,1e7,1e8");
        c.set("holder.threshold", "1e-6");
    }
    return c;
}

VolatilityBand band_from(const Config& c) {
    return VolatilityBand(c.get_num("band.lo_sq", 0.5),
                          c.get_num("band.hi_sq", 1.0));
}

SolverParams solver_from(const Config& c) {
    SolverParams p;
    p.dx = c.get_num("solver.dx", p.dx);
    p.cfl_fraction = c.get_num("solver.cfl_fraction", p.cfl_fraction);
    return p;
}

TerminalPayoff payoff_from(const Config& c) {
    const std::string kind = c.get("payoff.kind", "gaussian_bump");
    if (kind == "gaussian_bump")
        return TerminalPayoff::gaussian_bump(c.get_num("payoff.n", 4.0),
                                             c.get_num("payoff.a", 0.0));
    if (kind == "indicator_leq_reg")
        return TerminalPayoff::indicator_leq_reg(c.get_int("payoff.n", 4));
    if (kind == "distance_reg")
        return TerminalPayoff::distance_reg(
            c.get_int("payoff.n", 4),
            {Interval{c.get_num("payoff.set_lo", 0.0),
                      c.get_num("payoff.set_hi",
                                std::numeric_limits<double>::infinity())}});
    if (kind == "ball_bump")
        return TerminalPayoff::ball_bump(c.get_num("payoff.n", 4.0),
                                         c.get_num("payoff.a", 0.0),
                                         c.get_num("payoff.radius", 0.1));
    if (kind == "constant")
        return TerminalPayoff::constant(c.get_num("payoff.c", 1.0));
    throw std::invalid_argument("unknown payoff.kind: " + kind);
}

struct Artifact {
    std::string filename;
    std::string content;
    bool binary = false;
};

void write_artifacts(const std::string& out_dir,
                     const std::vector<Artifact>& artifacts) {
    std::filesystem::create_directories(out_dir);
    for (const Artifact& a : artifacts) {
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / a.filename;
        std::ofstream os(path, a.binary ? std::ios::binary : std::ios::out);
        if (!os) throw std::runtime_error("cannot write " + path.string());
        os << a.content;
        std::cout << "wrote " << path.string() << "\n";
    }
}

std::string hash_comment(const Config& c) {
    return "# config_hash=" + c.hash_hex() + "\n";
}

// ---------------------------------------------------------------------------

std::vector<Artifact> run_solve(const Config& cfg) {
    const VolatilityBand band = band_from(cfg);
    const TerminalPayoff payoff = payoff_from(cfg);
    const SolverParams params = solver_from(cfg);
    const double horizon = cfg.get_num("horizon", 1.0);
    const SpaceTimeField field = solve_auto(payoff, band, horizon, params);

    std::ostringstream os;
    os << hash_comment(cfg);
    field.write_csv(os);
    return {{"field.csv", os.str(), false}};
}

std::vector<Artifact> run_capacity(const Config& cfg) {
    const VolatilityBand band = band_from(cfg);
    CapacityParams cp;
    cp.solver = solver_from(cfg);
    cp.levels = cfg.get_int("capacity.levels", 3);
    cp.base_reg_n = cfg.get_int("capacity.base_reg_n", 256);
    cp.force_dx = cfg.get_num("capacity.force_dx", 0.0);
    cp.estimate_disc_gap = cfg.get_bool("capacity.disc_gap", true);

    const std::string kind = cfg.get("event.kind", "terminal_ball");
    const double t = cfg.get_num("event.t", 1.0);
    const double s = cfg.get_num("event.s", 1.0);
    const double a = cfg.get_num("event.a", 0.0);
    const double eps = cfg.get_num("event.eps", 0.1);
    const bool open = cfg.get_bool("event.open", true);

    std::ostringstream os;
    os << hash_comment(cfg);
    os << "event,params,value,upper_bound,reg_gap,disc_gap,method\n";
    auto row = [&](const std::string& event, const std::string& params,
                   const CapacityEstimate& e) {
        os << event << "," << params << "," << fmt(e.value) << ","
           << (e.certified_upper_bound ? fmt(*e.certified_upper_bound) : "")
           << "," << fmt(e.regularization_gap) << ","
           << fmt(e.discretization_gap_estimate) << "," << to_string(e.method)
           << "\n";
    };

    if (kind == "terminal_ball") {
        const std::string params = "t=" + fmt(t) + ";a=" + fmt(a) +
                                   ";eps=" + fmt(eps);
        row(kind, params, capacity_terminal_ball(t, a, eps, band, cp));
    } else if (kind == "terminal_halfline") {
        const std::string params =
            "t=" + fmt(t) + ";a=" + fmt(a) + ";open=" + (open ? "1" : "0");
        row(kind, params, capacity_terminal_halfline(t, a, open, band, cp));
    } else if (kind == "running_max_leq") {
        const std::string params = "t=" + fmt(t) + ";eps=" + fmt(eps);
        row(kind, params, capacity_running_max(t, eps, band, cp));
    } else if (kind == "increment_conjunction") {
        const Interval set{cfg.get_num("event.set_lo", 0.0),
                           cfg.get_num("event.set_hi",
                                       std::numeric_limits<double>::infinity())};
        const ProductCheck pc =
            capacity_product_check(t, s, set, open, band, cp);
        const std::string params = "t=" + fmt(t) + ";s=" + fmt(s) + ";set_lo=" +
                                   fmt(set.lo) + ";set_hi=" + fmt(set.hi) +
                                   ";open=" + (open ? "1" : "0");
        CapacityEstimate lhs, rhs;
        lhs.value = pc.lhs;
        rhs.value = pc.rhs;
        lhs.method = rhs.method = CapacityMethod::ProductFormula;
        lhs.regularization_gap = rhs.regularization_gap =
            pc.regularization_gap;
        lhs.discretization_gap_estimate = rhs.discretization_gap_estimate =
            pc.discretization_gap_estimate;
        row("increment_conjunction_lhs", params, lhs);
        row("increment_conjunction_rhs", params, rhs);
    } else if (kind == "monotone_decreasing") {
        const int n = cfg.get_int("event.n", 2);
        const MonotoneEventResult r = capacity_monotone_event(n, band, cp);
        const std::string params = "n=" + std::to_string(n);
        row(kind, params, r.estimate);
        CapacityEstimate pw;
        pw.value = r.rho_power;
        pw.method = CapacityMethod::DpAugmented;
        row("monotone_decreasing_rho_power", params, pw);
    } else {
        throw std::invalid_argument("unknown event.kind: " + kind);
    }
    return {{"capacity.csv", os.str(), false}};
}

std::vector<Artifact> run_sample(const Config& cfg) {
    const VolatilityBand band = band_from(cfg);
    const double dt = cfg.get_num("sample.dt", 0.001);
    const double horizon = cfg.get_num("horizon", 1.0);
    const int count = cfg.get_int("sample.count", 1000);
    const uint64_t seed = cfg.get_u64("seed", 42);
    const TerminalPayoff payoff = payoff_from(cfg);

    const std::string pk = cfg.get("policy.kind", "constant");
    ControlPolicy policy = ControlPolicy::constant(band.sigma_hi_sq);
    if (pk == "constant") {
        policy = ControlPolicy::constant(
            cfg.get_num("policy.sigma_sq", band.sigma_hi_sq));
    } else if (pk == "feedback") {
        const SolverParams sp = solver_from(cfg);
        SpaceTimeField field = solve_auto(payoff, band, horizon, sp);
        policy = extract_feedback_policy(std::move(field), band);
    } else {
        throw std::invalid_argument("unknown policy.kind: " + pk);
    }

    const PathEnsemble ens = sample_paths(policy, band, dt, horizon, count, seed);
    StatReport stats = path_statistics(ens, StatSpec{});
    const McResult mc = mc_expectation(ens, payoff);
    stats.add("terminal_payoff_mean", mc.mean);
    stats.add("terminal_payoff_stderr", mc.std_error);

    std::ostringstream csv, bin, json;
    csv << hash_comment(cfg);
    ens.write_csv(csv);
    ens.write_binary(bin);
    json << "{\"config_hash\":\"" << cfg.hash_hex() << "\",\"stats\":"
         << stats.to_json() << "}\n";
    return {{"ensemble.csv", csv.str(), false},
            {"ensemble.bin", bin.str(), true},
            {"stats.json", json.str(), false}};
}

std::vector<Artifact> run_verify(const Config& cfg, const std::string& check,
                                 int* exit_code) {
    VerifySettings settings;
    settings.seed = cfg.get_u64("seed", 42);
    const std::vector<CheckReport> reports =
        check.empty() ? run_all(settings)
                      : run_checks({check}, settings);
    for (const CheckReport& r : reports) {
        std::printf("%-24s %s  (%.1fs)  worst: %s\n", r.check_name.c_str(),
                    r.pass ? "pass" : "FAIL", r.runtime_seconds,
                    r.worst.c_str());
    }
    if (!all_pass(reports)) *exit_code = 1;
    std::ostringstream os;
    os << "{\"config_hash\":\"" << cfg.hash_hex() << "\",\"checks\":"
       << reports_to_json(reports) << "}\n";
    return {{"report.json", os.str(), false}};
}

std::vector<Artifact> run_holder(const Config& cfg) {
    const VolatilityBand band = band_from(cfg);
    const double gamma = cfg.get_num("holder.gamma", 0.75);
    const double beta = cfg.get_num("holder.beta", 1.0);
    const double threshold = cfg.get_num("holder.threshold", 1e-6);

    std::vector<double> n_list;
    std::istringstream ns(cfg.get("holder.n_list", ""));
    std::string tok;
    while (std::getline(ns, tok, ','))
        if (!tok.empty()) n_list.push_back(std::stod(tok));
    if (n_list.empty())
        throw std::invalid_argument("holder.n_list must be nonempty");

    const int l = holder_chain_l(gamma, band);
    const std::vector<double> terms =
        holder_chain_bound(gamma, beta, band, n_list);
    const double first =
        holder_chain_first_log10_n_below(gamma, beta, band, threshold);

    std::ostringstream os;
    os << hash_comment(cfg);
    os << "# l=" << l << " first_log10_n_below_threshold=" << fmt(first)
       << "\n";
    os << "n,term,log10_term\n";
    for (size_t i = 0; i < n_list.size(); ++i)
        os << fmt(n_list[i]) << "," << fmt(terms[i]) << ","
           << fmt(holder_chain_log10_term(gamma, beta, band,
                                          std::log10(n_list[i])))
           << "\n";
    return {{"holder.csv", os.str(), false}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"worst-case-volatility laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path, out_dir = ".", check_name;
    std::vector<std::string> overrides;
    uint64_t seed = 0;
    bool seed_given = false, print_config = false;
    int threads = 0;

    app.add_option("--config", config_path, "config file (key = value lines)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--set", overrides, "override: key=value (repeatable)");
    app.add_option("--threads", threads, "cap worker threads (0 = default)");
    app.add_flag("--print-config", print_config,
                 "print the fully resolved config and exit");
    auto* seed_opt = app.add_option("--seed", seed, "master RNG seed");

    CLI::App* sub_solve = app.add_subcommand("solve", "solve the PDE, emit field.csv");
    CLI::App* sub_capacity =
        app.add_subcommand("capacity", "capacity estimate, emit capacity.csv");
    CLI::App* sub_sample =
        app.add_subcommand("sample", "path ensemble + statistics");
    CLI::App* sub_verify = app.add_subcommand("verify", "run verification checks");
    CLI::App* sub_holder =
        app.add_subcommand("holder", "chain bound sequence, emit holder.csv");
    sub_verify->add_option("--check", check_name, "run a single named check");

    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;

    const std::string sub = sub_solve->parsed()      ? "solve"
                            : sub_capacity->parsed() ? "capacity"
                            : sub_sample->parsed()   ? "sample"
                            : sub_verify->parsed()   ? "verify"
                                                     : "holder";
    (void)sub_holder;

    try {
        Config cfg = defaults_for(sub);
        if (!config_path.empty()) {
            const Config file = Config::parse_file(config_path);
            for (const auto& [k, v] : file.entries()) cfg.set(k, v);
        }
        for (const std::string& ov : overrides) cfg.set_pair(ov);
        if (seed_given) cfg.set("seed", std::to_string(seed));
        if (threads > 0) cfg.set("threads", std::to_string(threads));

#ifdef _OPENMP
        const int cap = cfg.get_int("threads", 0);
        if (cap > 0) omp_set_num_threads(cap);
#endif

        if (print_config) {
            std::cout << cfg.canonical();
            std::cout << "# config_hash=" << cfg.hash_hex() << "\n";
            return 0;
        }

        int exit_code = 0;
        std::vector<Artifact> artifacts;
        if (sub == "solve") artifacts = run_solve(cfg);
        else if (sub == "capacity") artifacts = run_capacity(cfg);
        else if (sub == "sample") artifacts = run_sample(cfg);
        else if (sub == "verify") artifacts = run_verify(cfg, check_name, &exit_code);
        else artifacts = run_holder(cfg);

        write_artifacts(out_dir, artifacts);
        return exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
