#include "gband/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gband {

const char* to_string(CapacityMethod m) {
    switch (m) {
        case CapacityMethod::PdeRegularized: return "pde_regularized";
        case CapacityMethod::DpAugmented: return "dp_augmented";
        case CapacityMethod::ProductFormula: return "product_formula";
    }
    return "?";
}

namespace {

// Solve from an arbitrary sampled initial datum on a symmetric grid and read
// the terminal value at x_eval. Stores only the first and last level.
double solve_value(const std::function<double(double)>& f, double center,
                   double half_width, double duration,
                   const VolatilityBand& band, double dx, double x_eval,
                   bool parallel) {
    const double half = half_width + std::abs(x_eval - center);
    const int m = std::max(2, static_cast<int>(std::ceil(half / dx)));
    const Grid1D grid(center - m * dx, center + m * dx, 2 * m);
    SolverParams sp;
    sp.dx = dx;
    const TimeGrid tg = make_time_grid(grid, band, duration, sp);
    std::vector<double> init(grid.nodes());
    for (int i = 0; i < grid.nodes(); ++i) init[i] = f(grid.x(i));
    const SpaceTimeField field =
        solve_from_values(init, grid, tg, band, tg.nt, parallel);
    return field.value_at(duration, x_eval);
}

}  // namespace

CapacityEstimate capacity_terminal_ball(double t, double a, double eps,
                                        const VolatilityBand& band,
                                        const CapacityParams& params) {
    if (!(t > 0.0)) throw std::invalid_argument("capacity_terminal_ball: t > 0");
    if (eps < 0.0) throw std::invalid_argument("capacity_terminal_ball: eps >= 0");

    CapacityEstimate est;
    est.method = CapacityMethod::PdeRegularized;
    if (band.is_normalized()) {
        const double alpha = alpha_exponent(band);
        est.certified_upper_bound =
            std::exp(0.5) * std::pow(eps, 2.0 * alpha) / std::pow(t, alpha);
    }
    if (eps == 0.0) return est;  // polar level set

    const int L = std::max(2, params.levels);
    const double n0 = 1.0 / (eps * eps);
    const double n_max = n0 * std::pow(2.0, L - 1);
    SolverParams sp = params.solver;
    sp.dx = std::min(sp.dx, 0.25 / std::sqrt(n_max));

    std::vector<double> vals;
    for (int j = 0; j < L; ++j) {
        const double n = n0 * std::pow(2.0, j);
        const TerminalPayoff payoff = TerminalPayoff::ball_bump(n, a, eps);
        vals.push_back(feynman_kac_value(payoff, band, t, sp, 0.0));
    }
    est.value = vals.back();
    est.regularization_gap = std::max(0.0, vals[L - 2] - vals[L - 1]);
    if (params.estimate_disc_gap) {
        const TerminalPayoff payoff = TerminalPayoff::ball_bump(n_max, a, eps);
        const double fine = feynman_kac_value(payoff, band, t, sp.refined(), 0.0);
        est.discretization_gap_estimate = std::abs(fine - est.value);
    }
    return est;
}

CapacityEstimate capacity_terminal_halfline(double t, double a,
                                            bool open_halfline,
                                            const VolatilityBand& band,
                                            const CapacityParams& params) {
    if (!(t > 0.0))
        throw std::invalid_argument("capacity_terminal_halfline: t > 0");
    const int L = std::max(2, params.levels);
    CapacityEstimate est;
    est.method = CapacityMethod::PdeRegularized;

    if (!open_halfline) {
        std::vector<int> n_list;
        for (int j = 0; j < L; ++j)
            n_list.push_back(params.base_reg_n << (2 * j));
        SolverParams sp = params.solver;
        sp.dx = std::min(sp.dx, 0.3 / std::sqrt(static_cast<double>(n_list.back())));
        const RhoEstimate rho = rho_limit(band, t, n_list, sp, -a);
        est.value = rho.value;
        est.regularization_gap = rho.reg_gap;
        est.discretization_gap_estimate = rho.disc_gap;
        return est;
    }

    // Open half-line (-inf, a): distance regularizers increase to the
    // indicator, so the family approaches the capacity from below.
    std::vector<Interval> open_set{
        Interval{-std::numeric_limits<double>::infinity(), a}};
    std::vector<double> vals;
    int n_max = params.base_reg_n << (2 * (L - 1));
    SolverParams sp = params.solver;
    sp.dx = std::min(sp.dx, 16.0 / n_max);
    for (int j = 0; j < L; ++j) {
        const int n = params.base_reg_n << (2 * j);
        const TerminalPayoff payoff = TerminalPayoff::distance_reg(n, open_set);
        vals.push_back(feynman_kac_value(payoff, band, t, sp, 0.0));
    }
    est.value = vals.back();
    est.regularization_gap = std::abs(vals[L - 1] - vals[L - 2]);
    if (params.estimate_disc_gap) {
        const TerminalPayoff payoff = TerminalPayoff::distance_reg(n_max, open_set);
        const double fine = feynman_kac_value(payoff, band, t, sp.refined(), 0.0);
        est.discretization_gap_estimate = std::abs(fine - est.value);
    }
    return est;
}

namespace {

// One augmented-state DP pass: value of the regularized event
// {running max <= eps} with a linear ramp of width w above eps.
double running_max_dp(double t, double eps, double w,
                      const VolatilityBand& band, double dx, bool parallel) {
    const auto payoff = [&](double m) {
        if (m <= eps) return 1.0;
        if (m >= eps + w) return 0.0;
        return 1.0 - (m - eps) / w;
    };

    const int j0 = static_cast<int>(std::ceil(
                       (4.0 * std::sqrt(band.sigma_hi_sq * t) + eps) / dx)) + 2;
    const int jtop = static_cast<int>(std::ceil((eps + w) / dx)) + 2;
    const int nx = j0 + jtop;           // node j has x = (j - j0) dx
    const int M = jtop;                 // m rows 0..M, m = i dx; beyond is dead
    const int nt = std::max(1, static_cast<int>(std::ceil(
                                t * band.sigma_hi_sq / (dx * dx))));
    const double dt = t / nt;
    const double c = dt / (dx * dx);
    const double chi = 0.5 * band.sigma_hi_sq * c;
    const double clo = 0.5 * band.sigma_lo_sq * c;

    const size_t row = static_cast<size_t>(nx) + 1;
    std::vector<double> vold(static_cast<size_t>(M + 1) * row);
    std::vector<double> vnew(vold.size());
    for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= nx; ++j)
            vold[i * row + j] = payoff(dx * std::max(i, j - j0));

    for (int k = 0; k < nt; ++k) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i <= M; ++i) {
            std::vector<double> w_row(row);
            // projection: state (x, m) with x > m has running max x
            for (int j = 0; j <= nx; ++j) {
                const int mi = j - j0;
                if (mi <= i)
                    w_row[j] = vold[i * row + j];
                else
                    w_row[j] = mi <= M ? vold[static_cast<size_t>(mi) * row + j] : 0.0;
            }
            double* out = &vnew[i * row];
            out[0] = w_row[0];
            out[nx] = w_row[nx];
            for (int j = 1; j < nx; ++j) {
                const double s = w_row[j - 1] - 2.0 * w_row[j] + w_row[j + 1];
                out[j] = w_row[j] + (s >= 0.0 ? chi : clo) * s;
            }
        }
        vold.swap(vnew);
    }
    return vold[0 * row + j0];  // started at x = 0, running max 0
}

}  // namespace

CapacityEstimate capacity_running_max(double t, double eps,
                                      const VolatilityBand& band,
                                      const CapacityParams& params) {
    if (!(t > 0.0)) throw std::invalid_argument("capacity_running_max: t > 0");
    if (eps < 0.0) throw std::invalid_argument("capacity_running_max: eps >= 0");

    double dx;
    if (params.force_dx > 0.0) {
        dx = params.force_dx;
        if (eps > 0.0 && std::floor(eps / dx) + 1 < 4) {
            std::ostringstream os;
            os << "capacity_running_max: lattice too coarse, fewer than 4 "
                  "nodes in [0, eps]; need dx <= " << eps / 3.0;
            throw std::invalid_argument(os.str());
        }
    } else {
        dx = eps > 0.0
                 ? std::min(eps / 8.0, std::max(params.solver.dx, eps / 16.0))
                 : params.solver.dx;
    }

    const int L = std::max(2, params.levels);
    const bool par = params.solver.parallel;
    std::vector<double> vals;
    for (int j = 0; j < L; ++j) {
        const double w = 4.0 * dx * std::pow(2.0, L - 1 - j);
        vals.push_back(running_max_dp(t, eps, w, band, dx, par));
    }

    CapacityEstimate est;
    est.method = CapacityMethod::DpAugmented;
    est.value = vals.back();
    // The ramp payoff is dominated by the indicator of {max <= eps + w}, so
    // the reflection bound evaluated at eps + w certifies the regularization
    // allowance: value <= erf((eps+w)/scale) <= erf(eps/scale) + gap. The
    // empirical last-two-levels difference is kept as a floor.
    const double w_min = 4.0 * dx;
    const double scale = std::sqrt(2.0 * band.sigma_lo_sq * t);
    est.regularization_gap =
        std::max(std::max(0.0, vals[L - 2] - vals[L - 1]),
                 std::erf((eps + w_min) / scale) - std::erf(eps / scale));
    if (params.estimate_disc_gap) {
        const double fine = running_max_dp(t, eps, w_min, band, 0.5 * dx, par);
        est.discretization_gap_estimate = std::abs(fine - est.value);
    }
    est.certified_upper_bound = std::erf(eps / scale);
    return est;
}

namespace {

struct RegularizedSet {
    std::function<double(double)> eval;
    double endpoint_extent;
};

RegularizedSet set_regularizer(const Interval& set, bool open_set, int n) {
    double extent = 0.0;
    if (std::isfinite(set.lo)) extent = std::max(extent, std::abs(set.lo));
    if (std::isfinite(set.hi)) extent = std::max(extent, std::abs(set.hi));
    std::vector<Interval> sv{set};
    if (open_set) {
        // increases to the indicator of the open set
        return {[sv, n](double x) {
                    const double d = n * distance_to_complement(x, sv);
                    return d / (1.0 + d);
                },
                extent};
    }
    // decreases to the indicator of the closed set
    return {[sv, n](double x) { return 1.0 / (1.0 + n * distance_to_set(x, sv)); },
            extent};
}

}  // namespace

ProductCheck capacity_product_check(double t, double s, const Interval& set,
                                    bool open_set, const VolatilityBand& band,
                                    const CapacityParams& params) {
    if (!(t > 0.0) || !(s > 0.0))
        throw std::invalid_argument("capacity_product_check: t, s > 0");

    const int L = std::max(2, params.levels);
    const int n_max = params.base_reg_n << (2 * (L - 1));
    const double dx = std::min(params.solver.dx, 16.0 / n_max);
    const bool par = params.solver.parallel;

    auto evaluate = [&](int n, double dx_) {
        const RegularizedSet reg = set_regularizer(set, open_set, n);
        const double hw_in = reg.endpoint_extent +
                             4.0 * std::sqrt(band.sigma_hi_sq * s) + 1.0;
        const double hw_out = reg.endpoint_extent +
                              4.0 * std::sqrt(band.sigma_hi_sq * t) + 1.0;
        const double inner =
            solve_value(reg.eval, 0.0, hw_in, s, band, dx_, 0.0, par);
        const auto outer_payoff = [&](double x) { return reg.eval(x) * inner; };
        const double lhs =
            solve_value(outer_payoff, 0.0, hw_out, t, band, dx_, 0.0, par);
        const double outer =
            solve_value(reg.eval, 0.0, hw_out, t, band, dx_, 0.0, par);
        return std::pair<double, double>{lhs, outer * inner};
    };

    std::vector<double> lhs_vals, rhs_vals;
    for (int j = 0; j < L; ++j) {
        const int n = params.base_reg_n << (2 * j);
        auto [l, r] = evaluate(n, dx);
        lhs_vals.push_back(l);
        rhs_vals.push_back(r);
    }

    ProductCheck pc;
    pc.lhs = lhs_vals.back();
    pc.rhs = rhs_vals.back();
    pc.regularization_gap =
        std::max(std::abs(lhs_vals[L - 1] - lhs_vals[L - 2]),
                 std::abs(rhs_vals[L - 1] - rhs_vals[L - 2]));
    if (params.estimate_disc_gap) {
        auto [lf, rf] = evaluate(n_max, 0.5 * dx);
        pc.discretization_gap_estimate =
            std::max(std::abs(lf - pc.lhs), std::abs(rf - pc.rhs));
    }
    return pc;
}

MonotoneEventResult capacity_monotone_event(int n, const VolatilityBand& band,
                                            const CapacityParams& params) {
    if (n < 1 || n > 6)
        throw std::invalid_argument(
            "capacity_monotone_event: 1 <= n <= 6 (desk scale)");

    const double tau = 1.0 / n;
    const std::vector<int> m_levels{2048, 8192};
    const double dx =
        std::min(params.solver.dx, 0.3 / std::sqrt(static_cast<double>(m_levels.back())));
    const bool par = params.solver.parallel;
    const double hw = 0.3 + 4.0 * std::sqrt(band.sigma_hi_sq * tau) + 0.5;

    double rho_single = 0.0;
    auto nested = [&](int m, double dx_) {
        const auto phi = [m](double x) {
            return x <= 0.0 ? 1.0 : std::exp(-m * x * x);
        };
        double c = 1.0;
        double first = 0.0;
        for (int stage = 0; stage < n; ++stage) {
            const double cc = c;
            const auto payoff = [&](double x) { return phi(x) * cc; };
            c = solve_value(payoff, 0.0, hw, tau, band, dx_, 0.0, par);
            if (stage == 0) first = c;
        }
        return std::pair<double, double>{c, first};
    };

    std::vector<double> vals;
    for (int m : m_levels) {
        auto [v, first] = nested(m, dx);
        vals.push_back(v);
        rho_single = first;
    }

    MonotoneEventResult res;
    res.estimate.method = CapacityMethod::DpAugmented;
    res.estimate.value = vals.back();
    res.estimate.regularization_gap =
        std::abs(vals[vals.size() - 1] - vals[vals.size() - 2]);
    if (params.estimate_disc_gap) {
        auto [fine, first] = nested(m_levels.back(), 0.5 * dx);
        (void)first;
        res.estimate.discretization_gap_estimate =
            std::abs(fine - res.estimate.value);
    }
    res.rho_single = rho_single;
    res.rho_power = std::pow(rho_single, n);
    return res;
}

int holder_chain_l(double gamma, const VolatilityBand& band) {
    if (!(gamma > 0.5))
        throw std::invalid_argument("holder_chain: gamma > 1/2 required");
    const double alpha = alpha_exponent(band);
    // Tolerance keeps an exactly-integer quotient from being pushed up by
    // floating-point rounding (only l > quotient is required).
    return static_cast<int>(
               std::ceil(1.0 / (alpha * (2.0 * gamma - 1.0)) - 1e-9)) + 1;
}

double holder_chain_log10_term(double gamma, double beta,
                               const VolatilityBand& band, double log10_n) {
    const int l = holder_chain_l(gamma, band);
    const double alpha = alpha_exponent(band);
    const double log10_u = 0.5 / std::log(10.0) +
                           2.0 * alpha * std::log10(2.0 * beta * std::pow(l, gamma)) -
                           (2.0 * gamma - 1.0) * alpha * log10_n;
    return log10_n + l * std::min(0.0, log10_u);
}

std::vector<double> holder_chain_bound(double gamma, double beta,
                                       const VolatilityBand& band,
                                       const std::vector<double>& n_list) {
    const int l = holder_chain_l(gamma, band);
    const double alpha = alpha_exponent(band);
    const double coeff =
        std::exp(0.5) * std::pow(2.0 * beta * std::pow(l, gamma), 2.0 * alpha);
    std::vector<double> terms;
    for (double n : n_list) {
        const double u = coeff / std::pow(n, (2.0 * gamma - 1.0) * alpha);
        terms.push_back(n * std::pow(std::min(1.0, u), l));
    }
    // Eventually strictly decreasing: no increase after the last decrease
    // begins.
    size_t first_desc = terms.size();
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[i] < terms[i - 1]) {
            first_desc = i;
            break;
        }
    if (terms.size() > 1) {
        if (first_desc == terms.size())
            throw std::runtime_error(
                "holder_chain_bound: sequence never decreases on n_list; "
                "extend n_list");
        for (size_t i = first_desc + 1; i < terms.size(); ++i)
            if (terms[i] >= terms[i - 1])
                throw std::runtime_error(
                    "holder_chain_bound: sequence not eventually strictly "
                    "decreasing");
    }
    return terms;
}

double holder_chain_first_log10_n_below(double gamma, double beta,
                                        const VolatilityBand& band,
                                        double threshold) {
    const int l = holder_chain_l(gamma, band);
    const double alpha = alpha_exponent(band);
    const double beta_exp = (2.0 * gamma - 1.0) * alpha;
    const double c10 = 0.5 / std::log(10.0) +
                       2.0 * alpha * std::log10(2.0 * beta * std::pow(l, gamma));
    const double decay = l * beta_exp - 1.0;  // > 0 by choice of l
    const double target = std::log10(threshold);
    const double crossover = c10 / beta_exp;  // U(n) < 1 beyond this
    double x = std::max((target - l * c10) / (1.0 - l * beta_exp), crossover);
    double xi = std::ceil(x);
    while (holder_chain_log10_term(gamma, beta, band, xi) >= target) xi += 1.0;
    (void)decay;
    return xi;
}

std::string EventDescriptor::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind) {
        case Kind::TerminalBall:
            os << "terminal_ball(t=" << t << ",a=" << a << ",eps=" << eps << ")";
            break;
        case Kind::TerminalHalfline:
            os << "terminal_halfline(t=" << t << ",a=" << a
               << ",open=" << (open_set ? 1 : 0) << ")";
            break;
        case Kind::RunningMaxLeq:
            os << "running_max_leq(t=" << t << ",eps=" << eps << ")";
            break;
        case Kind::IncrementConjunction:
            os << "increment_conjunction(t=" << t << ",s=" << s << ",set=("
               << set.lo << "," << set.hi << "),open=" << (open_set ? 1 : 0)
               << ")";
            break;
        case Kind::MonotoneDecreasing:
            os << "monotone_decreasing(n=" << n << ")";
            break;
    }
    return os.str();
}

}  // namespace gband
