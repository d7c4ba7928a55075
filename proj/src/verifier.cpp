#include "gband/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gband/band.hpp"
#include "gband/capacity.hpp"
#include "gband/payoff.hpp"
#include "gband/policy.hpp"
#include "gband/sampler.hpp"
#include "gband/solver.hpp"

namespace gband {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Builder for a CheckReport; finish() settles the verdict and worst label.
class Check {
  public:
    explicit Check(std::string name) { r_.check_name = std::move(name); }

    void input(const std::string& key, const std::string& value) {
        r_.inputs.emplace_back(key, value);
    }
    void input(const std::string& key, double value) {
        r_.inputs.emplace_back(key, fmt_short(value));
    }

    void item(const std::string& label, double observed, double target,
              double margin) {
        r_.labels.push_back(label);
        r_.observed.push_back(observed);
        r_.bound_or_target.push_back(target);
        r_.margin.push_back(margin);
    }

    // Two-sided: |observed - target| <= tol.
    void near(const std::string& label, double observed, double target,
              double tol) {
        item(label, observed, target, tol - std::abs(observed - target));
    }

    // One-sided: observed <= bound.
    void below(const std::string& label, double observed, double bound) {
        item(label, observed, bound, bound - observed);
    }

    // One-sided: observed >= bound.
    void above(const std::string& label, double observed, double bound) {
        item(label, observed, bound, observed - bound);
    }

    CheckReport finish() {
        r_.pass = true;
        double worst = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < r_.margin.size(); ++i) {
            if (!(r_.margin[i] >= 0.0)) r_.pass = false;
            if (r_.margin[i] < worst) {
                worst = r_.margin[i];
                r_.worst = r_.labels[i];
            }
        }
        return r_;
    }

  private:
    CheckReport r_;
};

std::string band_tag(const VolatilityBand& band) {
    std::ostringstream os;
    os << "(" << band.sigma_lo_sq << "," << band.sigma_hi_sq << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact-solution oracle for the degenerate band.
CheckReport check_linear_oracle(const VerifySettings&) {
    Check c("linear_oracle");
    const VolatilityBand band(1.0, 1.0);
    const TerminalPayoff payoff = TerminalPayoff::gaussian_bump(4.0, 0.0);
    SolverParams p;
    p.dx = 0.01;
    c.input("band", band_tag(band));
    c.input("payoff", payoff.describe());
    c.input("dx", p.dx);
    c.input("horizon", 0.5);

    auto run = [&](const SolverParams& sp) {
        const SpaceTimeField f = solve_auto(payoff, band, 0.5, sp);
        double sup = 0.0;
        for (int j = 0; j < f.stored_levels(); ++j) {
            const double t = f.level_time(j);
            for (int i = 1; i < f.grid().nx; ++i) {
                const double exact =
                    linear_gaussian_solution(4.0, 0.0, 1.0, t, f.grid().x(i));
                sup = std::max(sup, std::abs(f.at(j, i) - exact));
            }
        }
        return std::pair<double, double>{f.value_at(0.5, 0.0), sup};
    };
    const auto [value, sup] = run(p);
    const auto [value_f, sup_f] = run(p.refined());
    (void)value_f;

    c.near("value at (t=0.5,x=0) vs 3^{-1/2}", value, 1.0 / std::sqrt(3.0),
           1e-3);
    c.below("interior sup-norm error", sup, 5e-3);
    c.below("refined sup error at most half of coarse", sup_f, 0.5 * sup);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Gaussian-bump solutions stay under the closed-form supersolution.
CheckReport check_supersolution_envelope(const VerifySettings&) {
    Check c("supersolution_envelope");
    const VolatilityBand band(0.5, 1.0);
    c.input("band", band_tag(band));
    c.input("n_list", "1,10,100");
    c.input("horizon", 1.0);

    for (const double n : {1.0, 10.0, 100.0}) {
        SolverParams p;
        p.dx = n >= 50.0 ? 0.0025 : 0.005;
        const TerminalPayoff payoff = TerminalPayoff::gaussian_bump(n, 0.0);
        const SpaceTimeField f = solve_auto(payoff, band, 1.0, p);
        double min_margin = std::numeric_limits<double>::infinity();
        for (int j = 0; j < f.stored_levels(); ++j) {
            const double t = f.level_time(j);
            for (int i = 1; i < f.grid().nx; ++i) {
                const double v = supersolution_v(n, 0.0, band, t, f.grid().x(i));
                min_margin = std::min(min_margin, v - f.at(j, i));
            }
        }
        c.above("min envelope margin, n=" + fmt_short(n), min_margin, -1e-6);
        if (n == 10.0) {
            const double slack = supersolution_v(10.0, 0.0, band, 0.5, 0.0) -
                                 f.value_at(0.5, 0.0);
            c.above("strict slack at (t=0.5,x=0), n=10", slack, 1e-3);
        }
    }
    return c.finish();
}

// ---------------------------------------------------------------------------
// The regularized half-line profile v(t,.) decreases strictly from 1 to 0.
CheckReport check_strict_decrease(const VerifySettings&) {
    Check c("strict_decrease");
    const int n_large = 4096;
    c.input("payoff", TerminalPayoff::indicator_leq_reg(n_large).describe());

    struct Case {
        VolatilityBand band;
        double t;
    };
    const Case cases[] = {{VolatilityBand(1.0, 1.0), 1.0},
                          {VolatilityBand(0.25, 1.0), 1.0},
                          {VolatilityBand(0.5, 1.0), 4.0}};
    for (const Case& cs : cases) {
        const std::string tag = band_tag(cs.band) + ",t=" + fmt_short(cs.t);
        SolverParams p;
        p.dx = std::min(0.005, 0.3 / std::sqrt(static_cast<double>(n_large)));
        const TerminalPayoff payoff = TerminalPayoff::indicator_leq_reg(n_large);
        const SpaceTimeField f = solve_auto(payoff, cs.band, cs.t, p);
        const int j = f.stored_levels() - 1;
        const auto u = f.level(j);
        const int nx = f.grid().nx;

        // Nonincreasing everywhere (discrete comparison, rounding slack);
        // strictly decreasing and inside (0,1) on the resolvable core, where
        // the profile is farther than 1e-6 from both flat tails.
        double min_diff = std::numeric_limits<double>::infinity();
        double min_strict = std::numeric_limits<double>::infinity();
        double umin = 1.0, umax = 0.0;
        for (int i = 0; i < nx; ++i)
            min_diff = std::min(min_diff, u[i] - u[i + 1]);
        for (int i = 1; i + 1 < nx; ++i) {
            const bool core = u[i] > 1e-6 && u[i] < 1.0 - 1e-6 &&
                              u[i + 1] > 1e-6 && u[i + 1] < 1.0 - 1e-6;
            if (core) min_strict = std::min(min_strict, u[i] - u[i + 1]);
        }
        for (int i = 1; i < nx; ++i) {
            umin = std::min(umin, u[i]);
            umax = std::max(umax, u[i]);
        }
        c.above("nonincreasing profile " + tag, min_diff, -1e-12);
        c.item("strict decrease on core " + tag, min_strict, 0.0, min_strict);
        c.above("interior min value " + tag, umin, -1e-12);
        c.below("interior max value " + tag, umax, 1.0 + 1e-12);
        c.near("left edge limit " + tag, u[0], 1.0, 1e-3);
        c.near("right edge limit " + tag, u[nx], 0.0, 1e-3);
        if (cs.band.is_degenerate())
            c.near("median value " + tag, f.value_at(cs.t, 0.0), 0.5, 1e-2);
    }
    return c.finish();
}

// ---------------------------------------------------------------------------
// rho = sup-expectation of the half-line event: scale invariance and range.
CheckReport check_rho_identities(const VerifySettings&) {
    Check c("rho_identities");
    const VolatilityBand band(0.25, 1.0);
    const std::vector<int> n_list{64, 512, 4096};
    SolverParams p;
    c.input("band", band_tag(band));
    c.input("n_list", "64,512,4096");
    c.input("times", "0.25,1,4");

    const double times[] = {0.25, 1.0, 4.0};
    std::vector<RhoEstimate> est;
    for (const double t : times) est.push_back(rho_limit(band, t, n_list, p));

    for (size_t i = 0; i < est.size(); ++i)
        for (size_t j = i + 1; j < est.size(); ++j) {
            const double overlap = std::min(est[i].upper, est[j].upper) -
                                   std::max(est[i].lower, est[j].lower);
            c.above("bracket overlap t=" + fmt_short(times[i]) + " vs t=" +
                        fmt_short(times[j]),
                    overlap, -1e-2);
        }

    double rho_up = est[0].value;
    for (const RhoEstimate& e : est) rho_up = std::min(rho_up, e.value);
    c.above("rho upper estimate above symmetry floor", rho_up, 0.5 - 1e-3);
    c.below("rho upper estimate strictly below one", rho_up, 1.0 - 1e-3);

    const VolatilityBand lin(1.0, 1.0);
    const RhoEstimate r = rho_limit(lin, 1.0, n_list, p);
    c.near("degenerate band rho vs 0.5", r.value, 0.5, 1e-2);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Independence of increments at the regularized level: lhs = rhs.
CheckReport check_capacity_factorization(const VerifySettings&) {
    Check c("capacity_factorization");
    const double inf = std::numeric_limits<double>::infinity();
    const Interval positive{0.0, inf};
    CapacityParams cp;
    cp.levels = 2;
    cp.base_reg_n = 1024;
    c.input("set", "(0,inf)");
    c.input("reg_levels", "1024,4096");

    {
        const VolatilityBand band(0.5, 1.0);
        const ProductCheck pc =
            capacity_product_check(1.0, 1.0, positive, true, band, cp);
        c.near("open set, band (0.5,1), t=s=1: lhs vs rhs", pc.lhs, pc.rhs,
               1e-2);
    }
    {
        CapacityParams fast = cp;
        fast.estimate_disc_gap = false;
        const VolatilityBand band(0.5, 1.0);
        const ProductCheck pc =
            capacity_product_check(1.0, 2.0, positive, false, band, fast);
        c.near("closed set, band (0.5,1), t=1,s=2: lhs vs rhs", pc.lhs, pc.rhs,
               1e-2);
    }
    {
        CapacityParams fast = cp;
        fast.estimate_disc_gap = false;
        const VolatilityBand band(1.0, 1.0);
        const ProductCheck pc =
            capacity_product_check(1.0, 1.0, positive, true, band, fast);
        c.near("degenerate band lhs vs 1/4", pc.lhs, 0.25, 1e-2);
        c.near("degenerate band rhs vs 1/4", pc.rhs, 0.25, 1e-2);
    }
    return c.finish();
}

// ---------------------------------------------------------------------------
// The n-increment monotone event value is the n-th power of one increment.
CheckReport check_rho_power_law(const VerifySettings&) {
    Check c("rho_power_law");
    CapacityParams cp;
    c.input("band", "(0.25,1)");
    c.input("n_range", "1..4");

    const VolatilityBand band(0.25, 1.0);
    const std::vector<int> reg_list{512, 2048, 8192};
    for (int n = 1; n <= 4; ++n) {
        const MonotoneEventResult r = capacity_monotone_event(n, band, cp);
        const double rel =
            std::abs(r.estimate.value - r.rho_power) / r.rho_power;
        c.below("staged value vs matched rho^n, n=" + std::to_string(n), rel,
                0.02);
        SolverParams p;
        const RhoEstimate rho = rho_limit(band, 1.0 / n, reg_list, p);
        const double rho_pow = std::pow(rho.value, n);
        const double rel_ind =
            std::abs(r.estimate.value - rho_pow) / rho_pow;
        c.below("staged value vs independent rho^n, n=" + std::to_string(n),
                rel_ind, 0.02);
    }

    const VolatilityBand lin(1.0, 1.0);
    const MonotoneEventResult r3 = capacity_monotone_event(3, lin, cp);
    c.near("degenerate band n=3 vs 1/8", r3.estimate.value, 0.125, 1e-2);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Terminal-ball capacities stay under the exp(1/2) eps^{2 alpha} / t^alpha
// bound over a (t, eps) grid; eps = 0 is polar.
CheckReport check_ball_capacity_bound(const VerifySettings&) {
    Check c("ball_capacity_bound");
    const VolatilityBand band(0.5, 1.0);
    CapacityParams cp;
    c.input("band", band_tag(band));
    c.input("t_grid", "0.5,1");
    c.input("eps_grid", "0.05,0.1,0.2");

    for (const double t : {0.5, 1.0})
        for (const double eps : {0.05, 0.1, 0.2}) {
            const CapacityEstimate est =
                capacity_terminal_ball(t, 0.0, eps, band, cp);
            const double bound = *est.certified_upper_bound;
            c.below("value vs bound+gaps at (t=" + fmt_short(t) + ",eps=" +
                        fmt_short(eps) + ")",
                    est.value, bound + est.combined_gap());
        }

    const CapacityEstimate polar = capacity_terminal_ball(1.0, 0.0, 0.0, band, cp);
    c.near("polar level set eps=0", polar.value, 0.0, 1e-12);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Running-max capacity: reflection bound at eps=0.05 and monotone decrease.
CheckReport check_running_max_polarity(const VerifySettings&) {
    Check c("running_max_polarity");
    const VolatilityBand band(0.5, 1.0);
    CapacityParams cp;
    cp.solver.dx = 0.0125;
    c.input("band", band_tag(band));
    c.input("t", 1.0);
    c.input("eps_grid", "0.2,0.1,0.05");

    std::vector<double> values;
    for (const double eps : {0.2, 0.1, 0.05}) {
        const CapacityEstimate est = capacity_running_max(1.0, eps, band, cp);
        values.push_back(est.value);
        c.below("value vs erf bound+gaps at eps=" + fmt_short(eps), est.value,
                *est.certified_upper_bound + est.combined_gap());
    }
    c.item("strict decrease eps 0.2 -> 0.1", values[1], values[0],
           values[0] - values[1]);
    c.item("strict decrease eps 0.1 -> 0.05", values[2], values[1],
           values[1] - values[2]);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Monte Carlo under the extracted bang-bang policy reproduces the PDE value;
// constant policies stay below it.
CheckReport check_mc_pde_consistency(const VerifySettings& settings) {
    Check c("mc_pde_consistency");
    const VolatilityBand band(0.5, 1.0);
    const TerminalPayoff payoff = TerminalPayoff::gaussian_bump(4.0, 0.0);
    SolverParams p;
    c.input("band", band_tag(band));
    c.input("payoff", payoff.describe());
    c.input("horizon", 1.0);
    c.input("paths", 100000.0);
    c.input("seed", static_cast<double>(settings.seed));

    SpaceTimeField field = solve_auto(payoff, band, 1.0, p);
    const double pde = field.value_at(1.0, 0.0);
    const ControlPolicy feedback = extract_feedback_policy(std::move(field), band);

    const double dt = 5e-4;
    std::vector<double> terminal =
        sample_terminal_values(feedback, band, dt, 1.0, 100000, settings.seed);
    for (double& x : terminal) x = payoff(x);
    const McResult mc = mc_mean(terminal);
    c.below("feedback MC mean vs PDE + 3 stderr", mc.mean,
            pde + 3.0 * mc.std_error);
    c.above("feedback MC near-optimality", mc.mean,
            pde - 3.0 * mc.std_error - 0.02 * pde);

    int k = 1;
    for (const double sig2 : {0.5, 0.75, 1.0}) {
        const ControlPolicy cons = ControlPolicy::constant(sig2);
        std::vector<double> vals = sample_terminal_values(
            cons, band, 1e-3, 1.0, 20000, settings.seed + k++);
        for (double& x : vals) x = payoff(x);
        const McResult m = mc_mean(vals);
        c.below("constant sigma_sq=" + fmt_short(sig2) + " MC vs PDE + 3 stderr",
                m.mean, pde + 3.0 * m.std_error);
    }
    return c.finish();
}

// ---------------------------------------------------------------------------
// Path-statistics combinatorics and the Hoelder-ratio dichotomy.
CheckReport check_path_statistics(const VerifySettings& settings) {
    Check c("path_statistics");
    const VolatilityBand band(1.0, 1.0);
    const ControlPolicy policy = ControlPolicy::constant(1.0);
    StatSpec spec;
    c.input("policy", policy.describe());
    c.input("paths", 1000.0);
    c.input("steps", 10000.0);
    c.input("seed", static_cast<double>(settings.seed));

    StatReport base, refined;
    {
        const PathEnsemble ens =
            sample_paths(policy, band, 1e-4, 1.0, 1000, settings.seed);
        base = path_statistics(ens, spec);
    }
    {
        const PathEnsemble ens =
            sample_paths(policy, band, 2.5e-5, 1.0, 1000, settings.seed + 1);
        refined = path_statistics(ens, spec);
    }

    c.near("local maxima fraction vs 1/4",
           base.get("local_maxima_fraction"), 0.25,
           3.0 * base.get("local_maxima_fraction_stderr"));
    for (const int w : {5, 10}) {
        const std::string key = "monotone_window_prob_w" + std::to_string(w);
        c.near("monotone window probability w=" + std::to_string(w),
               base.get(key), base.get(key + "_expected"),
               3.0 * base.get(key + "_stderr"));
    }

    const double r04 = refined.get("holder_ratio_g0.4_max") /
                       base.get("holder_ratio_g0.4_max");
    c.below("gamma=0.4 max ratio growth under dt/4", r04, 1.2);
    const double r075 = refined.get("holder_ratio_g0.75_min") /
                        base.get("holder_ratio_g0.75_min");
    c.above("gamma=0.75 min ratio growth under dt/4", r075,
            std::pow(4.0, 0.25) * 0.8);
    return c.finish();
}

// ---------------------------------------------------------------------------
// The analytic chain bound behind nowhere-Hoelder continuity.
CheckReport check_holder_chain(const VerifySettings&) {
    Check c("holder_chain");
    const VolatilityBand band(0.5, 1.0);
    const double beta = 1.0;
    c.input("band", band_tag(band));
    c.input("beta", beta);
    c.input("gammas", "0.6,0.75");

    struct Probe {
        double gamma;
        int l_expected;
        std::vector<double> n_list;
    };
    const Probe probes[] = {
        {0.75, 9, {1e2, 1e4, 1e6, 1e7, 1e8}},
        {0.6, 21, {1e10, 1e14, 1e16, 1e18}},
    };
    for (const Probe& pr : probes) {
        const std::string tag = "gamma=" + fmt_short(pr.gamma);
        const int l = holder_chain_l(pr.gamma, band);
        c.near("chain length " + tag, l, pr.l_expected, 0.5);
        const std::vector<double> terms =
            holder_chain_bound(pr.gamma, beta, band, pr.n_list);
        const size_t k = terms.size();
        c.above("tail strictly decreasing " + tag, terms[k - 2] - terms[k - 1],
                0.0);
        const double log10_n =
            holder_chain_first_log10_n_below(pr.gamma, beta, band, 1e-6);
        const double at = holder_chain_log10_term(pr.gamma, beta, band, log10_n);
        const double before =
            holder_chain_log10_term(pr.gamma, beta, band, log10_n - 1.0);
        c.below("log10 term below -6 at reported log10(n)=" + fmt_short(log10_n) +
                    " " + tag,
                at, -6.0);
        c.above("log10 term above -6 one decade earlier " + tag, before, -6.0);
    }

    // The degenerate band has the larger alpha, hence the faster decay at
    // equal n once both chains are in their decreasing range.
    const VolatilityBand lin(1.0, 1.0);
    c.near("degenerate band chain length gamma=0.75",
           holder_chain_l(0.75, lin), 5, 0.5);
    const double t_lin = holder_chain_log10_term(0.75, beta, lin, 10.0);
    const double t_band = holder_chain_log10_term(0.75, beta, band, 10.0);
    c.below("degenerate chain decays faster at n=1e10", t_lin, t_band);
    return c.finish();
}

// ---------------------------------------------------------------------------
// Representative artifacts are byte-identical across thread counts.
std::string determinism_artifacts(uint64_t seed) {
    std::ostringstream os;
    const VolatilityBand band(0.5, 1.0);

    SolverParams p;
    p.dx = 0.02;
    const SpaceTimeField field =
        solve_auto(TerminalPayoff::gaussian_bump(4.0, 0.0), band, 0.25, p);
    field.write_csv(os);

    CapacityParams cp;
    cp.solver.dx = 0.0125;
    const CapacityEstimate est = capacity_running_max(0.5, 0.1, band, cp);
    os << fmt(est.value) << "," << fmt(est.regularization_gap) << ","
       << fmt(est.discretization_gap_estimate) << "\n";

    const ControlPolicy policy = ControlPolicy::constant(1.0);
    const VolatilityBand lin(1.0, 1.0);
    const PathEnsemble ens = sample_paths(policy, lin, 1e-3, 1.0, 64, seed);
    ens.write_binary(os);
    ens.write_csv(os);
    os << path_statistics(ens, StatSpec{}).to_json() << "\n";
    return os.str();
}

CheckReport check_determinism(const VerifySettings& settings) {
    Check c("determinism");
    c.input("seed", static_cast<double>(settings.seed));
    c.input("threads", "1,4");

#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const std::string one = determinism_artifacts(settings.seed);
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
    const std::string four = determinism_artifacts(settings.seed);
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif

    c.item("artifact bytes identical across thread counts",
           one == four ? 1.0 : 0.0, 1.0, one == four ? 0.0 : -1.0);
    c.item("artifact nonempty", static_cast<double>(one.size()), 1.0,
           static_cast<double>(one.size()) - 1.0);
    return c.finish();
}

using CheckFn = CheckReport (*)(const VerifySettings&);

struct Entry {
    const char* name;
    CheckFn fn;
};

// Sorted by name; run_all relies on this order for deterministic reports.
const Entry kChecks[] = {
    {"ball_capacity_bound", check_ball_capacity_bound},
    {"capacity_factorization", check_capacity_factorization},
    {"determinism", check_determinism},
    {"holder_chain", check_holder_chain},
    {"linear_oracle", check_linear_oracle},
    {"mc_pde_consistency", check_mc_pde_consistency},
    {"path_statistics", check_path_statistics},
    {"rho_identities", check_rho_identities},
    {"rho_power_law", check_rho_power_law},
    {"running_max_polarity", check_running_max_polarity},
    {"strict_decrease", check_strict_decrease},
    {"supersolution_envelope", check_supersolution_envelope},
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

void append_number_list(std::ostringstream& os, const std::vector<double>& v) {
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << fmt(v[i]);
    }
    os << "]";
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const Entry& e : kChecks) names.push_back(e.name);
    return names;
}

CheckReport run_check(const std::string& name, const VerifySettings& settings) {
    for (const Entry& e : kChecks) {
        if (name == e.name) {
            const auto start = std::chrono::steady_clock::now();
            CheckReport r = e.fn(settings);
            r.runtime_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
            return r;
        }
    }
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names,
                                    const VerifySettings& settings) {
    std::vector<CheckReport> out;
    for (const std::string& n : names) out.push_back(run_check(n, settings));
    return out;
}

std::vector<CheckReport> run_all(const VerifySettings& settings) {
    return run_checks(check_names(), settings);
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.pass) return false;
    return true;
}

std::string reports_to_json(std::vector<CheckReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.check_name < b.check_name;
              });
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < reports.size(); ++r) {
        const CheckReport& c = reports[r];
        if (r) os << ",";
        os << "\n  {\"check_name\":\"" << json_escape(c.check_name) << "\",";
        os << "\"inputs\":{";
        for (size_t i = 0; i < c.inputs.size(); ++i) {
            if (i) os << ",";
            os << "\"" << json_escape(c.inputs[i].first) << "\":\""
               << json_escape(c.inputs[i].second) << "\"";
        }
        os << "},\"labels\":[";
        for (size_t i = 0; i < c.labels.size(); ++i) {
            if (i) os << ",";
            os << "\"" << json_escape(c.labels[i]) << "\"";
        }
        os << "],\"observed\":";
        append_number_list(os, c.observed);
        os << ",\"bound_or_target\":";
        append_number_list(os, c.bound_or_target);
        os << ",\"margin\":";
        append_number_list(os, c.margin);
        os << ",\"verdict\":\"" << (c.pass ? "pass" : "fail") << "\"";
        os << ",\"worst\":\"" << json_escape(c.worst) << "\"}";
    }
    os << "\n]\n";
    return os.str();
}

}  // namespace gband
