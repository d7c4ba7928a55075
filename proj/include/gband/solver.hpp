#pragma once

#include <vector>

#include "gband/band.hpp"
#include "gband/grid.hpp"
#include "gband/payoff.hpp"

namespace gband {

// One explicit step of u_{k+1} = u_k + dt * G(D2 u_k), centered second
// difference, boundary nodes frozen. dt_over_dx2 = dt / dx^2 must satisfy the
// CFL condition dt_over_dx2 * sigma_hi_sq <= 1. The parallel kernel writes
// each node independently, so its output is bitwise identical to the serial
// one for any thread count.
void gheat_step_serial(std::span<const double> in, std::span<double> out,
                       double dt_over_dx2, const VolatilityBand& band);
void gheat_step_parallel(std::span<const double> in, std::span<double> out,
                         double dt_over_dx2, const VolatilityBand& band);

struct SolverParams {
    double dx = 0.005;
    double cfl_fraction = 1.0;   // dt = cfl_fraction * dx^2 / sigma_hi_sq
    int max_stored_levels = 2001;
    double boundary_tol = 1e-3;  // payoff flatness required near boundaries
    double extra_halfwidth = 0.0;
    bool parallel = true;

    SolverParams refined() const {
        SolverParams p = *this;
        p.dx *= 0.5;
        return p;
    }
};

// Truncated domain per the 4-standard-deviation rule: half-width covers the
// payoff's feature scale plus 4 sqrt(sigma_hi_sq * horizon), centered at the
// payoff. `x_eval` widens the grid so the query point stays that margin away
// from the boundary too.
Grid1D make_grid(const TerminalPayoff& payoff, const VolatilityBand& band,
                 double horizon, const SolverParams& params,
                 double x_eval = 0.0);

TimeGrid make_time_grid(const Grid1D& grid, const VolatilityBand& band,
                        double horizon, const SolverParams& params);

// Explicit monotone solve from an already-sampled initial level. Rejects CFL
// violations; boundary nodes stay at their initial values.
SpaceTimeField solve_from_values(const std::vector<double>& initial,
                                 const Grid1D& grid, const TimeGrid& tg,
                                 const VolatilityBand& band, int stride,
                                 bool parallel);

// Full solve including the domain-width validation against the payoff.
SpaceTimeField solve(const TerminalPayoff& payoff, const VolatilityBand& band,
                     const Grid1D& grid, const TimeGrid& tg,
                     const SolverParams& params);

SpaceTimeField solve_auto(const TerminalPayoff& payoff,
                          const VolatilityBand& band, double horizon,
                          const SolverParams& params, double x_eval = 0.0);

// Solved field interpolated at (t, x): the nonlinear expectation of
// payoff(B_t + x).
double feynman_kac_value(const TerminalPayoff& payoff,
                         const VolatilityBand& band, double t,
                         const SolverParams& params, double x_eval = 0.0);

struct RhoEstimate {
    std::vector<double> n_list;
    std::vector<double> values;  // one per n, nonincreasing
    double value = 0.0;          // last value, upper estimate of rho
    double reg_gap = 0.0;        // n_last^{-alpha} t^{-alpha}
    double disc_gap = 0.0;       // one-step Richardson estimate
    double lower = 0.0;
    double upper = 0.0;
};

// Decreasing regularization of the half-line indicator 1_{B_t <= 0}:
// feynman_kac values for indicator_leq_reg(n) over n_list, with the
// certified regularization bracket.
RhoEstimate rho_limit(const VolatilityBand& band, double t,
                      const std::vector<int>& n_list,
                      const SolverParams& params, double x_eval = 0.0);

}  // namespace gband
