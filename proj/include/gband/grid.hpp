#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "gband/band.hpp"

namespace gband {

// Uniform spatial grid on [x_min, x_max] with nx intervals (nx+1 nodes).
struct Grid1D {
    double x_min;
    double x_max;
    int nx;

    Grid1D(double lo, double hi, int intervals)
        : x_min(lo), x_max(hi), nx(intervals) {
        if (!(lo < hi)) throw std::invalid_argument("Grid1D: x_min < x_max");
        if (intervals < 4) throw std::invalid_argument("Grid1D: nx >= 4");
    }

    double dx() const { return (x_max - x_min) / nx; }
    int nodes() const { return nx + 1; }
    double x(int i) const { return x_min + i * dx(); }

    int nearest_index(double xq) const {
        const double r = (xq - x_min) / dx();
        int i = static_cast<int>(r + 0.5);
        if (i < 0) i = 0;
        if (i > nx) i = nx;
        return i;
    }
};

// Uniform time grid on [0, horizon]. The explicit scheme is monotone only
// under the CFL condition dt <= dx^2 / sigma_hi_sq.
struct TimeGrid {
    double horizon;
    int nt;

    TimeGrid(double T, int steps) : horizon(T), nt(steps) {
        if (!(T > 0.0)) throw std::invalid_argument("TimeGrid: horizon > 0");
        if (steps < 1) throw std::invalid_argument("TimeGrid: nt >= 1");
    }

    double dt() const { return horizon / nt; }

    bool satisfies_cfl(const Grid1D& g, const VolatilityBand& band) const {
        const double dx = g.dx();
        return dt() <= dx * dx / band.sigma_hi_sq * (1.0 + 1e-12);
    }
};

// Grid function u(t, x) stored at a subset of time levels (every `stride`
// steps plus the final one) to keep long solves in memory.
class SpaceTimeField {
  public:
    SpaceTimeField(const Grid1D& grid, const TimeGrid& tg, int stride = 1);

    const Grid1D& grid() const { return grid_; }
    const TimeGrid& time_grid() const { return tg_; }
    int stride() const { return stride_; }

    int stored_levels() const { return static_cast<int>(level_steps_.size()); }
    int level_step(int j) const { return level_steps_[j]; }
    double level_time(int j) const { return level_steps_[j] * tg_.dt(); }

    std::span<double> level(int j) {
        return {data_.data() + static_cast<size_t>(j) * grid_.nodes(),
                static_cast<size_t>(grid_.nodes())};
    }
    std::span<const double> level(int j) const {
        return {data_.data() + static_cast<size_t>(j) * grid_.nodes(),
                static_cast<size_t>(grid_.nodes())};
    }

    double at(int j, int i) const {
        return data_[static_cast<size_t>(j) * grid_.nodes() + i];
    }

    // Bilinear interpolation between stored levels and adjacent nodes.
    double value_at(double t, double x) const;

    // Stored level with time closest to t.
    int nearest_level(double t) const;

    double min_value() const;
    double max_value() const;

    // CSV export: header "t,x,u", row-major by time level, 17 significant
    // digits.
    void write_csv(std::ostream& os) const;

  private:
    Grid1D grid_;
    TimeGrid tg_;
    int stride_;
    std::vector<int> level_steps_;
    std::vector<double> data_;
};

}  // namespace gband
