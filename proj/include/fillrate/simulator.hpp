#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fillrate/rng.hpp"
#include "fillrate/types.hpp"

namespace fillrate {

/// One replication's worth of configuration for the stocking facility.
struct SimConfig {
    DemandSpec demand;
    LeadTimeDistribution lead_time;
    double rop = 0.0;
    double roq = 0.0;
    UnfulfilledDemandMode mode = UnfulfilledDemandMode::Backorder;
    int horizon_days = 365;
    std::optional<double> initial_on_hand;  // defaults to rop + roq
    bool truncate_negative_demand = false;
    bool deliver_after_demand = false;  // sensitivity studies only
    std::uint64_t seed = 0;

    double initial_stock() const { return initial_on_hand.value_or(rop + roq); }

    void validate() const {
        demand.validate();
        lead_time.validate();
        if (!(roq > 0.0)) throw std::invalid_argument("roq must be > 0");
        if (!(rop >= 0.0)) throw std::invalid_argument("rop must be >= 0");
        if (horizon_days < 1) throw std::invalid_argument("horizon_days must be >= 1");
        if (!(initial_stock() >= 0.0))
            throw std::invalid_argument("initial_on_hand must be >= 0");
    }
};

struct PendingOrder {
    int due_day = 0;
    double qty = 0.0;
    bool operator==(const PendingOrder&) const = default;
};

/// Facility state at a day boundary. inventory_position is kept equal to
/// on_hand plus the quantity on order, which is how the simulated policy
/// tracks it (backorders are not subtracted).
struct FacilityState {
    double on_hand = 0.0;
    double inventory_position = 0.0;
    double backorder_total = 0.0;  // backorder mode only
    std::vector<PendingOrder> pending_orders;
    double total_demand = 0.0;
    double total_late_sales = 0.0;  // backorder mode
    double total_shipped = 0.0;     // lost-sales mode
    int day = 0;

    double on_order() const {
        double sum = 0.0;
        for (const PendingOrder& o : pending_orders) sum += o.qty;
        return sum;
    }

    bool operator==(const FacilityState&) const = default;
};

/// Per-day trace record (the delimited trace output writes one of these
/// per simulated day).
struct DayRecord {
    int day = 0;
    double demand = 0.0;
    double shipment = 0.0;
    double on_hand = 0.0;
    double inventory_position = 0.0;
    double backorder_total = 0.0;
    int orders_placed = 0;
    double deliveries = 0.0;
};

struct SimResult {
    double beta = 0.0;
    bool beta_defined = false;  // false when total demand came out zero
    double total_demand = 0.0;
    double total_late_sales = 0.0;
    double total_shipped = 0.0;
    FacilityState final_state;

    bool operator==(const SimResult&) const = default;
};

/// One day's demand draw. Negative draws pass through unless truncation
/// is enabled; the simulated system treats them as returns.
double draw_demand(RandomStream& rng, const DemandSpec& demand,
                   bool truncate_negative);

/// Integer lead time: floor of a continuous uniform draw on
/// [min_days, max_days). Uniform(7,13) yields 7..12, mean 9.5.
int draw_lead_time(RandomStream& rng, const LeadTimeDistribution& lead_time);

FacilityState initial_state(const SimConfig& cfg);

/// Advance one day: apply due deliveries, draw demand, ship, then place
/// at most one replenishment order if the post-shipment inventory
/// position is at or below 1.01*rop.
DayRecord step_day(FacilityState& state, const SimConfig& cfg, RandomStream& rng);

using DayCallback = std::function<void(const DayRecord&)>;

/// Run one full replication from a fresh state. Bit-identical results for
/// identical (cfg, seed). The optional callback sees every day's record.
SimResult run_replication(const SimConfig& cfg, const DayCallback& on_day = {});

/// Header and row formatting for the per-day trace (CSV).
std::string trace_header();
std::string trace_row(const DayRecord& rec);

}  // namespace fillrate
