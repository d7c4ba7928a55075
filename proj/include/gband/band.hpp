#pragma once

#include <stdexcept>

namespace gband {

// Volatility uncertainty interval [sigma_lo_sq, sigma_hi_sq] in variance units.
// The lower edge must be strictly positive; several bound computations
// additionally require the normalization sigma_hi_sq == 1 and check it at the
// call site.
struct VolatilityBand {
    double sigma_lo_sq;
    double sigma_hi_sq;

    VolatilityBand(double lo_sq, double hi_sq)
        : sigma_lo_sq(lo_sq), sigma_hi_sq(hi_sq) {
        if (!(lo_sq > 0.0) || !(lo_sq <= hi_sq))
            throw std::invalid_argument(
                "VolatilityBand: need 0 < sigma_lo_sq <= sigma_hi_sq");
    }

    bool is_normalized() const { return sigma_hi_sq == 1.0; }

    void require_normalized(const char* where) const {
        if (!is_normalized())
            throw std::invalid_argument(std::string(where) +
                                        ": requires sigma_hi_sq == 1");
    }

    bool is_degenerate() const { return sigma_lo_sq == sigma_hi_sq; }
};

// Generator of the nonlinear heat equation:
//   G(a) = (sigma_hi_sq * a^+ - sigma_lo_sq * a^-) / 2.
// Monotone nondecreasing, positively homogeneous, subadditive.
double g_value(double a, const VolatilityBand& band);

// alpha = sigma_lo_sq / 2, valid only under the normalization sigma_hi_sq = 1.
// Lies in (0, 1/2].
double alpha_exponent(const VolatilityBand& band);

// Closed-form supersolution for the Gaussian-bump initial datum
// exp(-n (x-a)^2 / 2):
//   v(t,x) = (n t + 1)^{-alpha} exp(-n (x-a)^2 / (2 (n t + 1))).
// Dominates the solved field on the whole strip.
double supersolution_v(double n, double a, const VolatilityBand& band,
                       double t, double x);

// Exact solution of the classical heat equation du/dt = (sigma_sq/2) u_xx
// from the same Gaussian bump; used as the oracle for degenerate bands.
double linear_gaussian_solution(double n, double a, double sigma_sq, double t,
                                double x);

}  // namespace gband
