#include "gband/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gband {

SpaceTimeField::SpaceTimeField(const Grid1D& grid, const TimeGrid& tg,
                               int stride)
    : grid_(grid), tg_(tg), stride_(std::max(1, stride)) {
    for (int k = 0; k <= tg_.nt; k += stride_) level_steps_.push_back(k);
    if (level_steps_.back() != tg_.nt) level_steps_.push_back(tg_.nt);
    data_.assign(static_cast<size_t>(level_steps_.size()) * grid_.nodes(), 0.0);
}

int SpaceTimeField::nearest_level(double t) const {
    const int levels = stored_levels();
    // Levels are stride-uniform except possibly the last; start from the
    // arithmetic guess and adjust locally.
    const double step = t / tg_.dt();
    int j = static_cast<int>(std::lround(step / stride_));
    j = std::clamp(j, 0, levels - 1);
    while (j + 1 < levels && std::abs(level_time(j + 1) - t) <= std::abs(level_time(j) - t))
        ++j;
    while (j > 0 && std::abs(level_time(j - 1) - t) < std::abs(level_time(j) - t))
        --j;
    return j;
}

double SpaceTimeField::value_at(double t, double x) const {
    const int levels = stored_levels();
    t = std::clamp(t, 0.0, tg_.horizon);
    int j1 = 0;
    while (j1 < levels - 1 && level_time(j1 + 1) < t) ++j1;
    int j2 = std::min(j1 + 1, levels - 1);
    double wt = 0.0;
    if (j2 > j1) {
        const double t1 = level_time(j1), t2 = level_time(j2);
        wt = (t - t1) / (t2 - t1);
        wt = std::clamp(wt, 0.0, 1.0);
    }

    const double dx = grid_.dx();
    double r = (x - grid_.x_min) / dx;
    r = std::clamp(r, 0.0, static_cast<double>(grid_.nx));
    const int i1 = std::min(static_cast<int>(r), grid_.nx - 1);
    const double wx = r - i1;

    auto interp_x = [&](int j) {
        return (1.0 - wx) * at(j, i1) + wx * at(j, i1 + 1);
    };
    return (1.0 - wt) * interp_x(j1) + wt * interp_x(j2);
}

double SpaceTimeField::min_value() const {
    return *std::min_element(data_.begin(), data_.end());
}

double SpaceTimeField::max_value() const {
    return *std::max_element(data_.begin(), data_.end());
}

void SpaceTimeField::write_csv(std::ostream& os) const {
    os << "t,x,u\n";
    char buf[96];
    for (int j = 0; j < stored_levels(); ++j) {
        const double t = level_time(j);
        for (int i = 0; i < grid_.nodes(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", t,
                          grid_.x(i), at(j, i));
            os << buf;
        }
    }
}

}  // namespace gband
