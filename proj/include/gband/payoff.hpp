#pragma once

#include <limits>
#include <string>
#include <vector>

namespace gband {

// Open or closed interval of the real line; infinite endpoints make half-lines.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

// Closed descriptor of the initial-data families used throughout. Keeping this
// an enum (rather than arbitrary callables) makes every experiment
// reconstructible from a config file.
//
//   gaussian_bump(n, a):     exp(-n (x-a)^2 / 2)
//   indicator_leq_reg(n):    1 for x <= 0, exp(-n x^2) for x > 0
//   distance_reg(n, set):    n d(x, complement) / (1 + n d(x, complement)),
//                            increasing to the indicator of the open set
//   ball_bump(n, a, radius): min(1, exp(-n ((x-a)^2 - radius^2) / 2)),
//                            equals 1 on |x-a| <= radius, decreasing in n
//                            toward the ball indicator
//   constant(c)
class TerminalPayoff {
  public:
    enum class Kind {
        GaussianBump,
        IndicatorLeqReg,
        DistanceReg,
        BallBump,
        Constant,
    };

    static TerminalPayoff gaussian_bump(double n, double a);
    static TerminalPayoff indicator_leq_reg(int n);
    static TerminalPayoff distance_reg(int n, std::vector<Interval> open_set);
    static TerminalPayoff ball_bump(double n, double a, double radius);
    static TerminalPayoff constant(double c);

    double operator()(double x) const;

    Kind kind() const { return kind_; }
    double n() const { return n_; }
    double center() const { return a_; }
    double radius() const { return radius_; }
    double constant_value() const { return c_; }
    const std::vector<Interval>& set() const { return set_; }

    // Inclusive range of the payoff over the line.
    double min_value() const;
    double max_value() const;

    std::string describe() const;

    // Half-width around center() outside which the payoff varies by less than
    // `tol` over any window of width `window`; used by the domain-truncation
    // rule. Conservative, derived per kind.
    double feature_radius(double tol) const;

  private:
    TerminalPayoff() = default;

    Kind kind_ = Kind::Constant;
    double n_ = 0.0;
    double a_ = 0.0;
    double radius_ = 0.0;
    double c_ = 0.0;
    std::vector<Interval> set_;
};

// Distance from x to the complement of the union of open intervals.
double distance_to_complement(double x, const std::vector<Interval>& set);

// Distance from x to the union of closed intervals (zero inside).
double distance_to_set(double x, const std::vector<Interval>& set);

}  // namespace gband
