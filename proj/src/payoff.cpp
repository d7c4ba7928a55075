#include "gband/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gband {

double distance_to_complement(double x, const std::vector<Interval>& set) {
    double best = 0.0;
    for (const auto& iv : set) {
        if (x <= iv.lo || x >= iv.hi) continue;
        const double dl = std::isinf(iv.lo) ? std::numeric_limits<double>::infinity() : x - iv.lo;
        const double dr = std::isinf(iv.hi) ? std::numeric_limits<double>::infinity() : iv.hi - x;
        best = std::max(best, std::min(dl, dr));
    }
    return best;
}

double distance_to_set(double x, const std::vector<Interval>& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : set) {
        double d = 0.0;
        if (x < iv.lo) d = iv.lo - x;
        else if (x > iv.hi) d = x - iv.hi;
        best = std::min(best, d);
    }
    return best;
}

TerminalPayoff TerminalPayoff::gaussian_bump(double n, double a) {
    if (n < 0.0) throw std::invalid_argument("gaussian_bump: n >= 0");
    TerminalPayoff p;
    p.kind_ = Kind::GaussianBump;
    p.n_ = n;
    p.a_ = a;
    return p;
}

TerminalPayoff TerminalPayoff::indicator_leq_reg(int n) {
    if (n < 1) throw std::invalid_argument("indicator_leq_reg: n >= 1");
    TerminalPayoff p;
    p.kind_ = Kind::IndicatorLeqReg;
    p.n_ = n;
    return p;
}

TerminalPayoff TerminalPayoff::distance_reg(int n, std::vector<Interval> open_set) {
    if (n < 1) throw std::invalid_argument("distance_reg: n >= 1");
    if (open_set.empty()) throw std::invalid_argument("distance_reg: empty set");
    TerminalPayoff p;
    p.kind_ = Kind::DistanceReg;
    p.n_ = n;
    p.set_ = std::move(open_set);
    return p;
}

TerminalPayoff TerminalPayoff::ball_bump(double n, double a, double radius) {
    if (!(n > 0.0)) throw std::invalid_argument("ball_bump: n > 0");
    if (radius < 0.0) throw std::invalid_argument("ball_bump: radius >= 0");
    TerminalPayoff p;
    p.kind_ = Kind::BallBump;
    p.n_ = n;
    p.a_ = a;
    p.radius_ = radius;
    return p;
}

TerminalPayoff TerminalPayoff::constant(double c) {
    TerminalPayoff p;
    p.kind_ = Kind::Constant;
    p.c_ = c;
    return p;
}

double TerminalPayoff::operator()(double x) const {
    switch (kind_) {
        case Kind::GaussianBump: {
            const double d = x - a_;
            return std::exp(-0.5 * n_ * d * d);
        }
        case Kind::IndicatorLeqReg:
            return x <= 0.0 ? 1.0 : std::exp(-n_ * x * x);
        case Kind::DistanceReg: {
            const double d = n_ * distance_to_complement(x, set_);
            return d / (1.0 + d);
        }
        case Kind::BallBump: {
            const double d = x - a_;
            const double e = -0.5 * n_ * (d * d - radius_ * radius_);
            return e >= 0.0 ? 1.0 : std::exp(e);
        }
        case Kind::Constant:
            return c_;
    }
    return 0.0;
}

double TerminalPayoff::min_value() const {
    if (kind_ == Kind::Constant) return c_;
    if (kind_ == Kind::GaussianBump && n_ == 0.0) return 1.0;
    return 0.0;
}

double TerminalPayoff::max_value() const {
    if (kind_ == Kind::Constant) return c_;
    return 1.0;
}

double TerminalPayoff::feature_radius(double tol) const {
    tol = std::max(tol, 1e-300);
    const double log_inv = std::log(1.0 / tol);
    switch (kind_) {
        case Kind::GaussianBump:
            return n_ > 0.0 ? std::sqrt(2.0 * log_inv / n_) : 0.0;
        case Kind::IndicatorLeqReg:
            return std::sqrt(log_inv / n_);
        case Kind::DistanceReg: {
            double endpoint = 0.0;
            for (const auto& iv : set_) {
                if (std::isfinite(iv.lo)) endpoint = std::max(endpoint, std::abs(iv.lo));
                if (std::isfinite(iv.hi)) endpoint = std::max(endpoint, std::abs(iv.hi));
            }
            // 1 - psi = 1/(1 + n d): flat to within tol once n d >= 1/tol.
            return endpoint + 1.0 / (n_ * tol);
        }
        case Kind::BallBump:
            return std::sqrt(radius_ * radius_ + 2.0 * log_inv / n_);
        case Kind::Constant:
            return 0.0;
    }
    return 0.0;
}

std::string TerminalPayoff::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind_) {
        case Kind::GaussianBump:
            os << "gaussian_bump(n=" << n_ << ",a=" << a_ << ")";
            break;
        case Kind::IndicatorLeqReg:
            os << "indicator_leq_reg(n=" << static_cast<long long>(n_) << ")";
            break;
        case Kind::DistanceReg: {
            os << "distance_reg(n=" << static_cast<long long>(n_) << ",set=";
            for (size_t i = 0; i < set_.size(); ++i) {
                if (i) os << "|";
                os << "(" << set_[i].lo << "," << set_[i].hi << ")";
            }
            os << ")";
            break;
        }
        case Kind::BallBump:
            os << "ball_bump(n=" << n_ << ",a=" << a_ << ",radius=" << radius_ << ")";
            break;
        case Kind::Constant:
            os << "constant(" << c_ << ")";
            break;
    }
    return os.str();
}

}  // namespace gband
