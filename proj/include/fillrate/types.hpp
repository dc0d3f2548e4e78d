#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace fillrate {

/// What happens to demand that cannot be served from stock.
enum class UnfulfilledDemandMode { Backorder, LostSales };

enum class ModelKind { Conventional, Undershoot };

/// Per-period (daily) customer demand, normally distributed.
struct DemandSpec {
    double mean_per_period = 0.0;
    double std_per_period = 0.0;

    void validate() const {
        if (!(mean_per_period > 0.0))
            throw std::invalid_argument("demand mean_per_period must be > 0");
        if (!(std_per_period >= 0.0))
            throw std::invalid_argument("demand std_per_period must be >= 0");
    }
};

/// Replenishment lead time, uniform on [min_days, max_days].
/// Moments are those of the continuous uniform; the simulator samples
/// integer days by flooring a continuous draw.
struct LeadTimeDistribution {
    double min_days = 0.0;
    double max_days = 0.0;

    double mean_days() const { return 0.5 * (min_days + max_days); }
    double std_days() const { return (max_days - min_days) / std::sqrt(12.0); }

    void validate() const {
        if (!(min_days > 0.0))
            throw std::invalid_argument("lead time min_days must be > 0");
        if (!(max_days >= min_days))
            throw std::invalid_argument("lead time max_days must be >= min_days");
    }
};

/// Mean and standard deviation of total demand over one lead time.
struct LeadTimeDemandMoments {
    double mu = 0.0;
    double sigma = 0.0;
};

/// Moments used by the periodic-review (undershoot) model: demand over one
/// review period and demand over one lead time.
struct ReviewMoments {
    double review_period = 0.0;
    double mu_r = 0.0;
    double sigma_r = 0.0;
    double mu_lt = 0.0;
    double sigma_lt = 0.0;

    /// Standard deviation of review-period plus lead-time demand.
    double combined_sigma() const {
        return std::sqrt(sigma_r * sigma_r + sigma_lt * sigma_lt);
    }
};

/// Output of a forward model evaluation. beta is not clamped: the
/// backorder form of the undershoot model can legitimately predict a
/// negative fill rate.
struct ModelPrediction {
    double lambda = 0.0;
    double expected_shortage = 0.0;
    std::optional<double> expected_undershoot;  // undershoot model only
    double beta = 0.0;
    double cycle_stock = 0.0;
    double safety_stock = 0.0;
    double rop = 0.0;
};

/// Reorder policy assembled from a safety stock factor.
struct Policy {
    double cycle_stock = 0.0;
    double safety_stock = 0.0;
    double rop = 0.0;
};

}  // namespace fillrate
