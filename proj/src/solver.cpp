#include "gband/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gband {

void gheat_step_serial(std::span<const double> in, std::span<double> out,
                       double dt_over_dx2, const VolatilityBand& band) {
    const int n = static_cast<int>(in.size()) - 1;
    const double hi = 0.5 * band.sigma_hi_sq * dt_over_dx2;
    const double lo = 0.5 * band.sigma_lo_sq * dt_over_dx2;
    out[0] = in[0];
    out[n] = in[n];
    for (int i = 1; i < n; ++i) {
        const double s = in[i - 1] - 2.0 * in[i] + in[i + 1];
        out[i] = in[i] + (s >= 0.0 ? hi : lo) * s;
    }
}

void gheat_step_parallel(std::span<const double> in, std::span<double> out,
                         double dt_over_dx2, const VolatilityBand& band) {
    const int n = static_cast<int>(in.size()) - 1;
    const double hi = 0.5 * band.sigma_hi_sq * dt_over_dx2;
    const double lo = 0.5 * band.sigma_lo_sq * dt_over_dx2;
    out[0] = in[0];
    out[n] = in[n];
    const double* u = in.data();
    double* v = out.data();
#pragma omp parallel for schedule(static)
    for (int i = 1; i < n; ++i) {
        const double s = u[i - 1] - 2.0 * u[i] + u[i + 1];
        v[i] = u[i] + (s >= 0.0 ? hi : lo) * s;
    }
}

Grid1D make_grid(const TerminalPayoff& payoff, const VolatilityBand& band,
                 double horizon, const SolverParams& params, double x_eval) {
    const double center = payoff.center();
    const double margin = 4.0 * std::sqrt(band.sigma_hi_sq * horizon);
    double half = payoff.feature_radius(params.boundary_tol) + margin +
                  std::abs(x_eval - center) + params.extra_halfwidth;
    const int m = std::max(2, static_cast<int>(std::ceil(half / params.dx)));
    return Grid1D(center - m * params.dx, center + m * params.dx, 2 * m);
}

TimeGrid make_time_grid(const Grid1D& grid, const VolatilityBand& band,
                        double horizon, const SolverParams& params) {
    const double dx = grid.dx();
    const double dt_target = params.cfl_fraction * dx * dx / band.sigma_hi_sq;
    const int nt = std::max(1, static_cast<int>(std::ceil(horizon / dt_target - 1e-12)));
    return TimeGrid(horizon, nt);
}

SpaceTimeField solve_from_values(const std::vector<double>& initial,
                                 const Grid1D& grid, const TimeGrid& tg,
                                 const VolatilityBand& band, int stride,
                                 bool parallel) {
    if (static_cast<int>(initial.size()) != grid.nodes())
        throw std::invalid_argument("solve_from_values: size mismatch");
    if (!tg.satisfies_cfl(grid, band)) {
        std::ostringstream os;
        os << "CFL violated: dt=" << tg.dt() << " exceeds dx^2/sigma_hi_sq="
           << grid.dx() * grid.dx() / band.sigma_hi_sq;
        throw std::invalid_argument(os.str());
    }

    SpaceTimeField field(grid, tg, stride);
    std::vector<double> cur = initial;
    std::vector<double> next(initial.size());
    const double c = tg.dt() / (grid.dx() * grid.dx());

    int out_level = 0;
    std::copy(cur.begin(), cur.end(), field.level(out_level).begin());
    ++out_level;

    for (int k = 0; k < tg.nt; ++k) {
        if (parallel)
            gheat_step_parallel(cur, next, c, band);
        else
            gheat_step_serial(cur, next, c, band);
        cur.swap(next);
        if (out_level < field.stored_levels() &&
            field.level_step(out_level) == k + 1) {
            std::copy(cur.begin(), cur.end(), field.level(out_level).begin());
            ++out_level;
        }
    }
    return field;
}

namespace {

int stride_for(const TimeGrid& tg, const SolverParams& params) {
    const int cap = std::max(2, params.max_stored_levels);
    return std::max(1, tg.nt / (cap - 1));
}

void check_domain(const TerminalPayoff& payoff, const VolatilityBand& band,
                  const Grid1D& grid, double horizon,
                  const SolverParams& params) {
    const double margin = 4.0 * std::sqrt(band.sigma_hi_sq * horizon);
    const double width = grid.x_max - grid.x_min;
    const double required =
        2.0 * (payoff.feature_radius(params.boundary_tol) + margin);
    auto zone_variation = [&](double lo, double hi) {
        double vmin = payoff(lo), vmax = vmin;
        const int samples = 64;
        for (int i = 1; i <= samples; ++i) {
            const double v = payoff(lo + (hi - lo) * i / samples);
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        return vmax - vmin;
    };
    const bool narrow =
        width < 2.0 * margin ||
        zone_variation(grid.x_min, grid.x_min + margin) > params.boundary_tol ||
        zone_variation(grid.x_max - margin, grid.x_max) > params.boundary_tol;
    if (narrow) {
        std::ostringstream os;
        os << "domain too narrow for " << payoff.describe()
           << ": payoff not flat within " << margin
           << " of a boundary; need width >= " << required << " around x="
           << payoff.center();
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

SpaceTimeField solve(const TerminalPayoff& payoff, const VolatilityBand& band,
                     const Grid1D& grid, const TimeGrid& tg,
                     const SolverParams& params) {
    check_domain(payoff, band, grid, tg.horizon, params);
    std::vector<double> init(grid.nodes());
    for (int i = 0; i < grid.nodes(); ++i) init[i] = payoff(grid.x(i));
    return solve_from_values(init, grid, tg, band, stride_for(tg, params),
                             params.parallel);
}

SpaceTimeField solve_auto(const TerminalPayoff& payoff,
                          const VolatilityBand& band, double horizon,
                          const SolverParams& params, double x_eval) {
    const Grid1D grid = make_grid(payoff, band, horizon, params, x_eval);
    const TimeGrid tg = make_time_grid(grid, band, horizon, params);
    return solve(payoff, band, grid, tg, params);
}

double feynman_kac_value(const TerminalPayoff& payoff,
                         const VolatilityBand& band, double t,
                         const SolverParams& params, double x_eval) {
    if (t < 0.0) throw std::invalid_argument("feynman_kac_value: t >= 0");
    if (t == 0.0) return payoff(x_eval);
    const SpaceTimeField field = solve_auto(payoff, band, t, params, x_eval);
    return field.value_at(t, x_eval);
}

RhoEstimate rho_limit(const VolatilityBand& band, double t,
                      const std::vector<int>& n_list,
                      const SolverParams& params, double x_eval) {
    if (n_list.empty()) throw std::invalid_argument("rho_limit: empty n_list");
    if (!(t > 0.0)) throw std::invalid_argument("rho_limit: t > 0");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("rho_limit: n_list must be increasing");
    const double alpha = alpha_exponent(band);

    // Shared grid: width from the smallest n (widest tail), resolution from
    // the largest (narrowest tail). Sharing the grid makes the discrete
    // comparison principle give exact pointwise monotonicity in n.
    SolverParams p = params;
    p.dx = std::min(params.dx, 0.3 / std::sqrt(static_cast<double>(n_list.back())));

    auto values_at = [&](const SolverParams& sp) {
        const TerminalPayoff widest = TerminalPayoff::indicator_leq_reg(n_list.front());
        const Grid1D grid = make_grid(widest, band, t, sp, x_eval);
        const TimeGrid tg = make_time_grid(grid, band, t, sp);
        std::vector<double> vals;
        for (int n : n_list) {
            const TerminalPayoff payoff = TerminalPayoff::indicator_leq_reg(n);
            const SpaceTimeField f = solve(payoff, band, grid, tg, sp);
            vals.push_back(f.value_at(t, x_eval));
        }
        return vals;
    };

    RhoEstimate est;
    est.values = values_at(p);
    for (int n : n_list) est.n_list.push_back(n);
    for (size_t i = 1; i < est.values.size(); ++i) {
        if (est.values[i] > est.values[i - 1] + 1e-6)
            throw std::runtime_error(
                "rho_limit: solver inconsistency, regularized sequence "
                "increased beyond slack");
    }

    // Re-solve the last level once on a refined grid for the discretization
    // gap estimate.
    {
        SolverParams fine = p.refined();
        const TerminalPayoff payoff = TerminalPayoff::indicator_leq_reg(n_list.back());
        const double v_fine = feynman_kac_value(payoff, band, t, fine, x_eval);
        est.disc_gap = std::abs(v_fine - est.values.back());
    }

    est.value = est.values.back();
    est.reg_gap = std::pow(static_cast<double>(n_list.back()), -alpha) *
                  std::pow(t, -alpha);
    est.lower = est.value - est.reg_gap - est.disc_gap;
    est.upper = est.value + est.disc_gap;
    return est;
}

}  // namespace gband
