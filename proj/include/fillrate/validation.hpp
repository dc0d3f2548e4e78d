#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fillrate/models.hpp"
#include "fillrate/simulator.hpp"
#include "fillrate/types.hpp"

namespace fillrate {

/// Master seed used when the caller does not supply one.
inline constexpr std::uint64_t kDefaultMasterSeed = 2024;

/// One validation configuration: which analytic model to compare against,
/// and the simulated system it should predict.
struct Scenario {
    ModelKind model = ModelKind::Conventional;
    UnfulfilledDemandMode mode = UnfulfilledDemandMode::Backorder;
    SimConfig sim;
    double review_period = 1.0;

    void validate() const {
        sim.validate();
        if (!(review_period > 0.0))
            throw std::invalid_argument("review_period must be > 0");
    }
};

struct ReplicationStats {
    int n = 0;
    double mean_beta = 0.0;
    double std_beta = 0.0;  // sample standard deviation, n-1 denominator
    std::vector<double> per_replication_betas;
};

/// Run n independent replications, seeded per replication index from the
/// master seed. Replications execute in parallel; results are identical
/// for a given master seed regardless of thread count.
ReplicationStats run_replications(const Scenario& scenario, int n,
                                  std::uint64_t master_seed, int threads = 0);

/// True iff |model_beta - mean| <= 2 * std.
bool two_sigma_match(double model_beta, const ReplicationStats& stats);

enum class TableId {
    ConvBackorder,
    ConvLostSales,
    UndershootBackorder,
    UndershootLostSales,
};

ModelKind table_model(TableId id);
UnfulfilledDemandMode table_mode(TableId id);
std::string table_name(TableId id);
/// Parses the CLI spelling ("conv-backorder", ...); throws on anything else.
TableId parse_table_id(const std::string& name);

struct ValidationRow {
    double sigma_d = 0.0;
    double q = 0.0;
    double model_beta = 0.0;
    double sim_mean_beta = 0.0;
    double sim_std_beta = 0.0;
    bool matches = false;
};

struct ValidationTable {
    TableId id = TableId::ConvBackorder;
    std::vector<ValidationRow> rows;  // sigma-major, q ascending; 12 rows
};

/// The factorial validation study: one base system, a list of demand
/// standard deviations, and a list of reorder quantities.
struct StudyParams {
    double demand_mean = 500.0;
    std::vector<double> demand_stds = {200.0, 400.0, 600.0};
    std::vector<double> qs = {1000.0, 2000.0, 4000.0, 6000.0};
    LeadTimeDistribution lead_time{7.0, 13.0};
    double rop = 5000.0;
    int horizon_days = 365;
    double review_period = 1.0;
};

struct GridOptions {
    int replications = 100;
    std::uint64_t master_seed = kDefaultMasterSeed;
    NormalCdf cdf = NormalCdf::LogisticApprox;
    bool truncate_negative_demand = false;
    int threads = 0;  // 0 = hardware concurrency
};

/// Regenerate one validation table: model column from the forward
/// prediction at the study's reorder point, simulation columns from
/// replication batches. Tables for the same unfulfilled-demand mode share
/// identical simulation statistics (cell seeds depend on the mode and
/// grid position, never on the analytic model).
ValidationTable run_grid(TableId id, const GridOptions& opts = {},
                         const StudyParams& study = {});

/// Adaptive quadrature of int_rop^(mu+12*sigma) (x-rop)^power f(x) dx for
/// f = Normal(mu, sigma), power 1 or 2, relative tolerance 1e-8.
/// Independent cross-check for the closed-form shortage expressions.
double numeric_shortage_oracle(double mu, double sigma, double rop, int power);

}  // namespace fillrate
