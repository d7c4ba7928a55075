#pragma once

#include <cmath>
#include <cstdint>

namespace gband {

// splitmix64 finalizer; also used to derive independent per-path streams from
// (master seed, path index) so ensembles are identical under any parallel
// schedule.
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform in (0, 1].
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
    }

  private:
    uint64_t state_;
};

// Standard normal stream via Box-Muller on a SplitMix64 state.
class GaussianStream {
  public:
    GaussianStream(uint64_t master_seed, uint64_t stream_index)
        : rng_(mix64(master_seed ^ mix64(stream_index + 1))) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    SplitMix64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gband
