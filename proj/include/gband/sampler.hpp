#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gband/band.hpp"
#include "gband/payoff.hpp"
#include "gband/policy.hpp"

namespace gband {

// Euler ensemble of controlled paths X_{k+1} = X_k + theta_k sqrt(dt) xi_k,
// one independent Gaussian stream per path. Immutable after construction.
class PathEnsemble {
  public:
    PathEnsemble(double dt, double horizon, int count, uint64_t seed, int steps)
        : dt_(dt), horizon_(horizon), count_(count), seed_(seed), steps_(steps),
          paths_(static_cast<size_t>(count) * (steps + 1), 0.0) {}

    double dt() const { return dt_; }
    double horizon() const { return horizon_; }
    int count() const { return count_; }
    int steps() const { return steps_; }
    uint64_t seed() const { return seed_; }

    double at(int path, int step) const {
        return paths_[static_cast<size_t>(path) * (steps_ + 1) + step];
    }
    std::span<const double> path(int p) const {
        return {paths_.data() + static_cast<size_t>(p) * (steps_ + 1),
                static_cast<size_t>(steps_ + 1)};
    }
    std::span<double> mutable_path(int p) {
        return {paths_.data() + static_cast<size_t>(p) * (steps_ + 1),
                static_cast<size_t>(steps_ + 1)};
    }

    // CSV: one path per row, 17 significant digits.
    void write_csv(std::ostream& os) const;
    // Binary: magic "GBM1", then little-endian f64 dt, f64 horizon,
    // u64 count, followed by the path matrix as f64.
    void write_binary(std::ostream& os) const;

  private:
    double dt_;
    double horizon_;
    int count_;
    uint64_t seed_;
    int steps_;
    std::vector<double> paths_;
};

PathEnsemble sample_paths(const ControlPolicy& policy,
                          const VolatilityBand& band, double dt, double horizon,
                          int count, uint64_t seed);

struct McResult {
    double mean;
    double std_error;
};

McResult mc_expectation(const PathEnsemble& ensemble,
                        const TerminalPayoff& payoff);

// Same Euler scheme and per-path streams as sample_paths, but keeps only the
// terminal value (resp. the running maximum) per path; for large ensembles
// where storing the matrix is wasteful.
std::vector<double> sample_terminal_values(const ControlPolicy& policy,
                                           const VolatilityBand& band,
                                           double dt, double horizon, int count,
                                           uint64_t seed);
std::vector<double> sample_running_max(const ControlPolicy& policy,
                                       const VolatilityBand& band, double dt,
                                       double horizon, int count,
                                       uint64_t seed);

McResult mc_mean(const std::vector<double>& values);

struct StatSpec {
    std::vector<double> gammas = {0.4, 0.75};
    int holder_window_steps = 1;
    std::vector<int> monotone_windows = {5, 10};
    double occupation_center = 0.0;
    std::vector<double> occupation_eps = {0.1};
};

// Flat ordered report; serializes to JSON with stable key order.
class StatReport {
  public:
    void add(const std::string& key, double value) {
        entries_.emplace_back(key, value);
    }
    double get(const std::string& key) const;
    const std::vector<std::pair<std::string, double>>& entries() const {
        return entries_;
    }
    std::string to_json() const;

  private:
    std::vector<std::pair<std::string, double>> entries_;
};

StatReport path_statistics(const PathEnsemble& ensemble, const StatSpec& spec);

}  // namespace gband
