#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gband/band.hpp"
#include "gband/payoff.hpp"
#include "gband/solver.hpp"

namespace gband {

enum class CapacityMethod { PdeRegularized, DpAugmented, ProductFormula };

const char* to_string(CapacityMethod m);

// A capacity value c(A) = sup_P P(A) computed through a decreasing family of
// smooth dominating (or increasing minorizing) payoffs, with the gap budget
// split into the regularization tail and a one-refinement discretization
// estimate.
struct CapacityEstimate {
    double value = 0.0;
    CapacityMethod method = CapacityMethod::PdeRegularized;
    double regularization_gap = 0.0;
    double discretization_gap_estimate = 0.0;
    std::optional<double> certified_upper_bound;

    double combined_gap() const {
        return regularization_gap + discretization_gap_estimate;
    }
};

struct CapacityParams {
    SolverParams solver;
    int levels = 3;              // regularization levels per family
    bool estimate_disc_gap = true;
    double force_dx = 0.0;       // running-max lattice override; 0 = auto
    int base_reg_n = 256;        // first level for indicator-style families
};

// c(|B_t - a| <= eps) via capped-Gaussian dominating bumps; certified bound
// exp(1/2) eps^{2 alpha} / t^alpha for normalized bands. eps = 0 degenerates
// to the polar level set and returns 0.
CapacityEstimate capacity_terminal_ball(double t, double a, double eps,
                                        const VolatilityBand& band,
                                        const CapacityParams& params);

// c(B_t <= a) (closed) or c(B_t < a) (open).
CapacityEstimate capacity_terminal_halfline(double t, double a,
                                            bool open_halfline,
                                            const VolatilityBand& band,
                                            const CapacityParams& params);

// c(max_{s<=t} X_s <= eps) by dynamic programming on the augmented state
// (x, running max) over a shared lattice; certified bound
// erf(eps / sqrt(2 sigma_lo_sq t)) from the reflection argument.
CapacityEstimate capacity_running_max(double t, double eps,
                                      const VolatilityBand& band,
                                      const CapacityParams& params);

struct ProductCheck {
    double lhs = 0.0;  // two-stage composed value
    double rhs = 0.0;  // product of single-increment values
    double regularization_gap = 0.0;
    double discretization_gap_estimate = 0.0;
};

// Factorization c(B_t in O, B_{t+s}-B_t in O) = c(B_t in O) c(B_{t+s}-B_t in O)
// at the regularized level; open sets use the distance regularizer from
// inside, closed sets its complement form from outside.
ProductCheck capacity_product_check(double t, double s, const Interval& set,
                                    bool open_set, const VolatilityBand& band,
                                    const CapacityParams& params);

struct MonotoneEventResult {
    CapacityEstimate estimate;  // n-stage nested DP value
    double rho_single = 0.0;    // matched single-increment value
    double rho_power = 0.0;     // rho_single^n
};

// c of the n-increment monotone-decreasing event over horizon 1; desk scale
// restricts 1 <= n <= 6.
MonotoneEventResult capacity_monotone_event(int n, const VolatilityBand& band,
                                            const CapacityParams& params);

// l = ceil(1 / (alpha (2 gamma - 1))) + 1; requires gamma > 1/2 and a
// normalized band.
int holder_chain_l(double gamma, const VolatilityBand& band);

// The analytic bound sequence n * min(1, U(n))^l with
// U(n) = exp(1/2) (2 beta l^gamma)^{2 alpha} / n^{(2 gamma - 1) alpha}.
// Throws unless the sequence is eventually strictly decreasing on n_list.
std::vector<double> holder_chain_bound(double gamma, double beta,
                                       const VolatilityBand& band,
                                       const std::vector<double>& n_list);

// log10 of the bound term at n = 10^log10_n; usable far beyond double range.
double holder_chain_log10_term(double gamma, double beta,
                               const VolatilityBand& band, double log10_n);

// Smallest log10(n) (integer exponent) with bound term below `threshold`.
double holder_chain_first_log10_n_below(double gamma, double beta,
                                        const VolatilityBand& band,
                                        double threshold);

// Event families of the capacity engine, in config-file form.
struct EventDescriptor {
    enum class Kind {
        TerminalBall,
        TerminalHalfline,
        RunningMaxLeq,
        IncrementConjunction,
        MonotoneDecreasing,
    };
    Kind kind = Kind::TerminalBall;
    double t = 1.0;
    double s = 1.0;
    double a = 0.0;
    double eps = 0.1;
    bool open_set = false;
    int n = 1;
    Interval set;

    std::string describe() const;
};

}  // namespace gband
