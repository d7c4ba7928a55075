#include "gband/band.hpp"

#include <cmath>

namespace gband {

double g_value(double a, const VolatilityBand& band) {
    if (a >= 0.0) return 0.5 * band.sigma_hi_sq * a;
    return 0.5 * band.sigma_lo_sq * a;
}

double alpha_exponent(const VolatilityBand& band) {
    band.require_normalized("alpha_exponent");
    return 0.5 * band.sigma_lo_sq;
}

double supersolution_v(double n, double a, const VolatilityBand& band,
                       double t, double x) {
    if (n < 0.0) throw std::invalid_argument("supersolution_v: n >= 0");
    if (t < 0.0) throw std::invalid_argument("supersolution_v: t >= 0");
    const double alpha = alpha_exponent(band);
    const double s = n * t + 1.0;
    const double d = x - a;
    return std::pow(s, -alpha) * std::exp(-n * d * d / (2.0 * s));
}

double linear_gaussian_solution(double n, double a, double sigma_sq, double t,
                                double x) {
    if (n < 0.0) throw std::invalid_argument("linear_gaussian_solution: n >= 0");
    if (!(sigma_sq > 0.0))
        throw std::invalid_argument("linear_gaussian_solution: sigma_sq > 0");
    if (t < 0.0) throw std::invalid_argument("linear_gaussian_solution: t >= 0");
    const double s = n * sigma_sq * t + 1.0;
    const double d = x - a;
    return std::exp(-n * d * d / (2.0 * s)) / std::sqrt(s);
}

}  // namespace gband
