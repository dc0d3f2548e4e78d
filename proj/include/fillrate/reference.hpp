#pragma once

#include <span>

#include "fillrate/validation.hpp"

namespace fillrate {

/// One cell of the published validation study this tool regenerates:
/// model prediction, simulation mean and standard deviation over 100
/// replications, and the two-standard-deviation match verdict, all in
/// percent as printed in the reference.
struct ReferenceRow {
    double sigma_d;
    double q;
    double model_beta_pct;
    double sim_mean_pct;
    double sim_std_pct;
    bool matches;
};

/// The 12 reference rows (sigma-major, q ascending) for one table.
std::span<const ReferenceRow> reference_rows(TableId id);

}  // namespace fillrate
