#include "gband/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "gband/rng.hpp"

namespace gband {

void PathEnsemble::write_csv(std::ostream& os) const {
    char buf[40];
    for (int p = 0; p < count_; ++p) {
        auto row = path(p);
        for (int k = 0; k <= steps_; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
            if (k) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

void PathEnsemble::write_binary(std::ostream& os) const {
    // Little-endian hosts only (x86/ARM); asserted at build time elsewhere.
    os.write("GBM1", 4);
    os.write(reinterpret_cast<const char*>(&dt_), 8);
    os.write(reinterpret_cast<const char*>(&horizon_), 8);
    const uint64_t n = static_cast<uint64_t>(count_);
    os.write(reinterpret_cast<const char*>(&n), 8);
    os.write(reinterpret_cast<const char*>(paths_.data()),
             static_cast<std::streamsize>(paths_.size() * sizeof(double)));
}

PathEnsemble sample_paths(const ControlPolicy& policy,
                          const VolatilityBand& band, double dt, double horizon,
                          int count, uint64_t seed) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_paths: dt > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("sample_paths: horizon > 0");
    if (count < 1) throw std::invalid_argument("sample_paths: count >= 1");
    policy.validate_against(band);

    const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));
    const double dt_eff = horizon / steps;
    PathEnsemble ens(dt_eff, horizon, count, seed, steps);

    const double sqrt_dt = std::sqrt(dt_eff);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < count; ++p) {
        GaussianStream g(seed, static_cast<uint64_t>(p));
        auto row = ens.mutable_path(p);
        row[0] = 0.0;
        double x = 0.0;
        for (int k = 0; k < steps; ++k) {
            const double th2 = policy.sigma_sq(k * dt_eff, x);
            x += std::sqrt(th2) * sqrt_dt * g.next();
            row[k + 1] = x;
        }
    }
    return ens;
}

namespace {

template <typename Reduce>
std::vector<double> sample_reduced(const ControlPolicy& policy,
                                   const VolatilityBand& band, double dt,
                                   double horizon, int count, uint64_t seed,
                                   Reduce reduce) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample: dt > 0");
    if (!(horizon > 0.0)) throw std::invalid_argument("sample: horizon > 0");
    if (count < 1) throw std::invalid_argument("sample: count >= 1");
    policy.validate_against(band);

    const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));
    const double dt_eff = horizon / steps;
    const double sqrt_dt = std::sqrt(dt_eff);
    std::vector<double> out(count);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < count; ++p) {
        GaussianStream g(seed, static_cast<uint64_t>(p));
        double x = 0.0, acc = 0.0;
        for (int k = 0; k < steps; ++k) {
            const double th2 = policy.sigma_sq(k * dt_eff, x);
            x += std::sqrt(th2) * sqrt_dt * g.next();
            acc = reduce(acc, x);
        }
        out[p] = acc;
    }
    return out;
}

}  // namespace

std::vector<double> sample_terminal_values(const ControlPolicy& policy,
                                           const VolatilityBand& band,
                                           double dt, double horizon, int count,
                                           uint64_t seed) {
    auto keep_last = [](double, double x) { return x; };
    return sample_reduced(policy, band, dt, horizon, count, seed, keep_last);
}

std::vector<double> sample_running_max(const ControlPolicy& policy,
                                       const VolatilityBand& band, double dt,
                                       double horizon, int count,
                                       uint64_t seed) {
    auto keep_max = [](double acc, double x) { return std::max(acc, x); };
    return sample_reduced(policy, band, dt, horizon, count, seed, keep_max);
}

McResult mc_mean(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mc_mean: empty sample");
    const size_t n = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    return {mean, sd / std::sqrt(static_cast<double>(n))};
}

McResult mc_expectation(const PathEnsemble& ensemble,
                        const TerminalPayoff& payoff) {
    const int n = ensemble.count();
    std::vector<double> vals(n);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < n; ++p) vals[p] = payoff(ensemble.at(p, ensemble.steps()));

    // Serial reduction keeps the result independent of the thread count.
    double sum = 0.0;
    for (double v : vals) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    return {mean, sd / std::sqrt(static_cast<double>(n))};
}

double StatReport::get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    throw std::out_of_range("StatReport: no key " + key);
}

std::string StatReport::to_json() const {
    std::ostringstream os;
    char buf[40];
    os << "{\n";
    for (size_t i = 0; i < entries_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", entries_[i].second);
        os << "  \"" << entries_[i].first << "\": " << buf;
        if (i + 1 < entries_.size()) os << ',';
        os << '\n';
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string num_tag(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct PathStats {
    double maxima_fraction = 0.0;
    int maxima_count = 0;
    int longest_run = 0;
    std::vector<int> window_hits;   // per monotone window size
    std::vector<int> window_total;
    std::vector<double> holder_ratio;  // per gamma
    std::vector<double> occupation;    // per eps
    double terminal = 0.0;
};

PathStats stats_for_path(std::span<const double> x, double dt,
                         const StatSpec& spec) {
    PathStats st;
    const int steps = static_cast<int>(x.size()) - 1;
    st.terminal = x[steps];

    for (int k = 1; k < steps; ++k)
        if (x[k] > x[k - 1] && x[k] > x[k + 1]) ++st.maxima_count;
    st.maxima_fraction =
        steps > 1 ? static_cast<double>(st.maxima_count) / (steps - 1) : 0.0;

    int run = 0, prev_sign = 0;
    for (int k = 1; k <= steps; ++k) {
        const double d = x[k] - x[k - 1];
        const int sign = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
        if (sign != 0 && sign == prev_sign) {
            ++run;
        } else {
            run = sign != 0 ? 1 : 0;
        }
        prev_sign = sign;
        st.longest_run = std::max(st.longest_run, run);
    }

    for (int w : spec.monotone_windows) {
        int hits = 0, total = 0;
        for (int start = 0; start + w <= steps; start += w) {
            bool up = true, down = true;
            for (int k = start; k < start + w; ++k) {
                const double d = x[k + 1] - x[k];
                up = up && d > 0.0;
                down = down && d < 0.0;
            }
            ++total;
            if (up || down) ++hits;
        }
        st.window_hits.push_back(hits);
        st.window_total.push_back(total);
    }

    const int kw = spec.holder_window_steps;
    const double denom_base = std::pow(kw * dt, 1.0);
    (void)denom_base;
    for (double gamma : spec.gammas) {
        const double denom = std::pow(kw * dt, gamma);
        double best = 0.0;
        for (int i = 0; i + kw <= steps; ++i)
            best = std::max(best, std::abs(x[i + kw] - x[i]) / denom);
        st.holder_ratio.push_back(best);
    }

    for (double eps : spec.occupation_eps) {
        int cnt = 0;
        for (int k = 1; k <= steps; ++k)
            if (std::abs(x[k] - spec.occupation_center) <= eps) ++cnt;
        st.occupation.push_back(cnt * dt);
    }
    return st;
}

void add_mean_stderr(StatReport& r, const std::string& key,
                     const std::vector<double>& vals) {
    const size_t n = vals.size();
    double sum = 0.0;
    for (double v : vals) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    r.add(key, mean);
    r.add(key + "_stderr", sd / std::sqrt(static_cast<double>(n)));
}

}  // namespace

StatReport path_statistics(const PathEnsemble& ensemble, const StatSpec& spec) {
    if (ensemble.steps() < 2)
        throw std::invalid_argument("path_statistics: need >= 2 steps");
    const int n = ensemble.count();
    const double dt = ensemble.dt();

    std::vector<PathStats> per_path(n);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < n; ++p)
        per_path[p] = stats_for_path(ensemble.path(p), dt, spec);

    StatReport r;
    r.add("count", n);
    r.add("steps", ensemble.steps());
    r.add("dt", dt);
    r.add("horizon", ensemble.horizon());

    {
        std::vector<double> terminal(n);
        for (int p = 0; p < n; ++p) terminal[p] = per_path[p].terminal;
        double sum = 0.0;
        for (double v : terminal) sum += v;
        const double mean = sum / n;
        double m2 = 0.0, m4 = 0.0;
        for (double v : terminal) {
            const double d = v - mean;
            m2 += d * d;
            m4 += d * d * d * d;
        }
        const double var = m2 / (n - 1);
        m4 /= n;
        const double var_se = std::sqrt(std::max(0.0, m4 - var * var) / n);
        r.add("terminal_mean", mean);
        r.add("terminal_variance", var);
        r.add("terminal_variance_stderr", var_se);
    }

    {
        std::vector<double> frac(n);
        for (int p = 0; p < n; ++p) frac[p] = per_path[p].maxima_fraction;
        add_mean_stderr(r, "local_maxima_fraction", frac);
        double count_sum = 0.0;
        for (int p = 0; p < n; ++p) count_sum += per_path[p].maxima_count;
        r.add("local_maxima_per_unit_time", count_sum / n / ensemble.horizon());
    }

    {
        int longest = 0;
        for (int p = 0; p < n; ++p)
            longest = std::max(longest, per_path[p].longest_run);
        r.add("longest_monotone_run_steps", longest);
        r.add("longest_monotone_run_time", longest * dt);
    }

    for (size_t wi = 0; wi < spec.monotone_windows.size(); ++wi) {
        long hits = 0, total = 0;
        for (int p = 0; p < n; ++p) {
            hits += per_path[p].window_hits[wi];
            total += per_path[p].window_total[wi];
        }
        const double prob = total > 0 ? static_cast<double>(hits) / total : 0.0;
        const double se =
            total > 0 ? std::sqrt(std::max(prob * (1.0 - prob), 1e-300) / total)
                      : 0.0;
        const std::string tag = "monotone_window_prob_w" +
                                std::to_string(spec.monotone_windows[wi]);
        r.add(tag, prob);
        r.add(tag + "_stderr", se);
        r.add(tag + "_expected",
              std::pow(2.0, 1.0 - spec.monotone_windows[wi]));
    }

    for (size_t gi = 0; gi < spec.gammas.size(); ++gi) {
        std::vector<double> ratios(n);
        for (int p = 0; p < n; ++p) ratios[p] = per_path[p].holder_ratio[gi];
        const std::string tag = "holder_ratio_g" + num_tag(spec.gammas[gi]);
        r.add(tag + "_max", *std::max_element(ratios.begin(), ratios.end()));
        r.add(tag + "_min", *std::min_element(ratios.begin(), ratios.end()));
        double sum = 0.0;
        for (double v : ratios) sum += v;
        r.add(tag + "_mean", sum / n);
    }

    for (size_t ei = 0; ei < spec.occupation_eps.size(); ++ei) {
        std::vector<double> occ(n);
        for (int p = 0; p < n; ++p) occ[p] = per_path[p].occupation[ei];
        add_mean_stderr(
            r, "occupation_time_eps" + num_tag(spec.occupation_eps[ei]), occ);
    }

    return r;
}

}  // namespace gband
