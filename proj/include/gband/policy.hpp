#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gband/band.hpp"
#include "gband/grid.hpp"

namespace gband {

// A volatility control theta^2(t, x). Constant, an explicit time-state table
// with nearest-node lookup, or the bang-bang rule read off a solved field.
class ControlPolicy {
  public:
    enum class Kind { Constant, Table, FeedbackFromField };

    static ControlPolicy constant(double sigma_sq);
    // times ascending (forward time); values row-major (time, node).
    static ControlPolicy table(std::vector<double> times, Grid1D xgrid,
                               std::vector<double> sigma_sq_values);
    static ControlPolicy feedback_from_field(
        std::shared_ptr<const SpaceTimeField> field, VolatilityBand band);

    Kind kind() const { return kind_; }

    // Forward-time evaluation. The feedback rule reads the field backward:
    // control time t maps to field time (horizon - t), so the sign of the
    // second difference at remaining time drives the bang-bang choice;
    // exact zero picks sigma_hi_sq.
    double sigma_sq(double t, double x) const;

    double min_sigma_sq() const;
    double max_sigma_sq() const;

    void validate_against(const VolatilityBand& band) const;

    std::string describe() const;

  private:
    ControlPolicy() = default;

    Kind kind_ = Kind::Constant;
    double const_sigma_sq_ = 0.0;
    std::vector<double> times_;
    std::vector<Grid1D> xgrid_;  // empty or one element
    std::vector<double> values_;
    std::shared_ptr<const SpaceTimeField> field_;
    std::vector<VolatilityBand> band_;  // empty or one element
};

// Bang-bang feedback rule from a solved field: sigma_hi_sq where the centered
// second difference (at remaining time) is >= 0, else sigma_lo_sq.
ControlPolicy extract_feedback_policy(SpaceTimeField field,
                                      const VolatilityBand& band);

}  // namespace gband
