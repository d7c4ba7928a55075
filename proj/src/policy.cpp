#include "gband/policy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gband {

ControlPolicy ControlPolicy::constant(double sigma_sq) {
    if (!(sigma_sq > 0.0))
        throw std::invalid_argument("ControlPolicy::constant: sigma_sq > 0");
    ControlPolicy p;
    p.kind_ = Kind::Constant;
    p.const_sigma_sq_ = sigma_sq;
    return p;
}

ControlPolicy ControlPolicy::table(std::vector<double> times, Grid1D xgrid,
                                   std::vector<double> sigma_sq_values) {
    if (times.empty()) throw std::invalid_argument("ControlPolicy::table: no times");
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("ControlPolicy::table: times must ascend");
    if (sigma_sq_values.size() != times.size() * static_cast<size_t>(xgrid.nodes()))
        throw std::invalid_argument("ControlPolicy::table: size mismatch");
    ControlPolicy p;
    p.kind_ = Kind::Table;
    p.times_ = std::move(times);
    p.xgrid_.push_back(xgrid);
    p.values_ = std::move(sigma_sq_values);
    return p;
}

ControlPolicy ControlPolicy::feedback_from_field(
    std::shared_ptr<const SpaceTimeField> field, VolatilityBand band) {
    if (!field) throw std::invalid_argument("feedback_from_field: null field");
    ControlPolicy p;
    p.kind_ = Kind::FeedbackFromField;
    p.field_ = std::move(field);
    p.band_.push_back(band);
    return p;
}

double ControlPolicy::sigma_sq(double t, double x) const {
    switch (kind_) {
        case Kind::Constant:
            return const_sigma_sq_;
        case Kind::Table: {
            size_t j = 0;
            double best = std::abs(times_[0] - t);
            for (size_t k = 1; k < times_.size(); ++k) {
                const double d = std::abs(times_[k] - t);
                if (d < best) {
                    best = d;
                    j = k;
                }
            }
            const int i = xgrid_[0].nearest_index(x);
            return values_[j * xgrid_[0].nodes() + i];
        }
        case Kind::FeedbackFromField: {
            const SpaceTimeField& f = *field_;
            const double remaining =
                std::clamp(f.time_grid().horizon - t, 0.0, f.time_grid().horizon);
            const int j = f.nearest_level(remaining);
            int i = f.grid().nearest_index(x);
            i = std::clamp(i, 1, f.grid().nx - 1);
            const double d2 = f.at(j, i - 1) - 2.0 * f.at(j, i) + f.at(j, i + 1);
            const VolatilityBand& b = band_[0];
            return d2 >= 0.0 ? b.sigma_hi_sq : b.sigma_lo_sq;
        }
    }
    return const_sigma_sq_;
}

double ControlPolicy::min_sigma_sq() const {
    switch (kind_) {
        case Kind::Constant:
            return const_sigma_sq_;
        case Kind::Table:
            return *std::min_element(values_.begin(), values_.end());
        case Kind::FeedbackFromField:
            return band_[0].sigma_lo_sq;
    }
    return const_sigma_sq_;
}

double ControlPolicy::max_sigma_sq() const {
    switch (kind_) {
        case Kind::Constant:
            return const_sigma_sq_;
        case Kind::Table:
            return *std::max_element(values_.begin(), values_.end());
        case Kind::FeedbackFromField:
            return band_[0].sigma_hi_sq;
    }
    return const_sigma_sq_;
}

void ControlPolicy::validate_against(const VolatilityBand& band) const {
    const double slop = 1e-12;
    if (min_sigma_sq() < band.sigma_lo_sq - slop ||
        max_sigma_sq() > band.sigma_hi_sq + slop) {
        std::ostringstream os;
        os << "policy emits sigma_sq in [" << min_sigma_sq() << ", "
           << max_sigma_sq() << "] outside band [" << band.sigma_lo_sq << ", "
           << band.sigma_hi_sq << "]";
        throw std::invalid_argument(os.str());
    }
}

std::string ControlPolicy::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind_) {
        case Kind::Constant:
            os << "constant(" << const_sigma_sq_ << ")";
            break;
        case Kind::Table:
            os << "table(" << times_.size() << "x" << xgrid_[0].nodes() << ")";
            break;
        case Kind::FeedbackFromField:
            os << "feedback_from_field(horizon="
               << field_->time_grid().horizon << ")";
            break;
    }
    return os.str();
}

ControlPolicy extract_feedback_policy(SpaceTimeField field,
                                      const VolatilityBand& band) {
    auto shared = std::make_shared<SpaceTimeField>(std::move(field));
    return ControlPolicy::feedback_from_field(std::move(shared), band);
}

}  // namespace gband
