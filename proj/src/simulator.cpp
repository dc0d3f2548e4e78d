#include "fillrate/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace fillrate {

double draw_demand(RandomStream& rng, const DemandSpec& demand,
                   bool truncate_negative) {
    const double value = rng.normal(demand.mean_per_period, demand.std_per_period);
    if (truncate_negative && value < 0.0) return 0.0;
    return value;
}

int draw_lead_time(RandomStream& rng, const LeadTimeDistribution& lead_time) {
    return static_cast<int>(std::floor(rng.uniform(lead_time.min_days, lead_time.max_days)));
}

FacilityState initial_state(const SimConfig& cfg) {
    FacilityState st;
    st.on_hand = cfg.initial_stock();
    st.inventory_position = st.on_hand;
    return st;
}

namespace {

/// Move all orders due by `day` into on-hand stock; returns quantity received.
double apply_due_deliveries(FacilityState& st) {
    double received = 0.0;
    auto due = [&](const PendingOrder& o) { return o.due_day <= st.day; };
    for (const PendingOrder& o : st.pending_orders)
        if (due(o)) received += o.qty;
    if (received > 0.0) {
        st.pending_orders.erase(
            std::remove_if(st.pending_orders.begin(), st.pending_orders.end(), due),
            st.pending_orders.end());
        st.on_hand += received;
    }
    return received;
}

}  // namespace

DayRecord step_day(FacilityState& st, const SimConfig& cfg, RandomStream& rng) {
    st.day += 1;
    DayRecord rec;
    rec.day = st.day;

    if (!cfg.deliver_after_demand) rec.deliveries = apply_due_deliveries(st);

    const double demand = draw_demand(rng, cfg.demand, cfg.truncate_negative_demand);
    rec.demand = demand;
    st.total_demand += demand;

    double shipment;
    if (cfg.mode == UnfulfilledDemandMode::Backorder) {
        const double owed = demand + st.backorder_total;
        if (owed <= st.on_hand) {
            shipment = owed;
            st.backorder_total = 0.0;
        } else {
            shipment = st.on_hand;
            // exact sum is positive here; clamp shields against rounding
            st.backorder_total = std::max(0.0, st.backorder_total + (demand - shipment));
        }
        st.total_late_sales += std::max(0.0, demand - shipment);
    } else {
        shipment = std::min(demand, st.on_hand);
        st.total_shipped += shipment;
    }
    st.on_hand -= shipment;
    rec.shipment = shipment;

    if (cfg.deliver_after_demand) rec.deliveries = apply_due_deliveries(st);

    st.inventory_position = st.on_hand + st.on_order();
    if (st.inventory_position <= 1.01 * cfg.rop) {
        const int lead = draw_lead_time(rng, cfg.lead_time);
        if (lead <= 0) {
            st.on_hand += cfg.roq;  // arrives within the same day
        } else {
            st.pending_orders.push_back({st.day + lead, cfg.roq});
        }
        st.inventory_position = st.on_hand + st.on_order();
        rec.orders_placed = 1;
    }

    rec.on_hand = st.on_hand;
    rec.inventory_position = st.inventory_position;
    rec.backorder_total = st.backorder_total;
    return rec;
}

SimResult run_replication(const SimConfig& cfg, const DayCallback& on_day) {
    cfg.validate();
    RandomStream rng(cfg.seed);
    FacilityState st = initial_state(cfg);
    for (int day = 0; day < cfg.horizon_days; ++day) {
        const DayRecord rec = step_day(st, cfg, rng);
        if (on_day) on_day(rec);
    }

    SimResult result;
    result.total_demand = st.total_demand;
    result.total_late_sales = st.total_late_sales;
    result.total_shipped = st.total_shipped;
    result.beta_defined = st.total_demand != 0.0;
    if (result.beta_defined) {
        result.beta = cfg.mode == UnfulfilledDemandMode::Backorder
                          ? 1.0 - st.total_late_sales / st.total_demand
                          : st.total_shipped / st.total_demand;
    }
    result.final_state = std::move(st);
    return result;
}

std::string trace_header() {
    return "day,demand,shipment,on_hand,inventory_position,backorder_total,"
           "orders_placed,deliveries";
}

std::string trace_row(const DayRecord& rec) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%.6f",
                  rec.day, rec.demand, rec.shipment, rec.on_hand,
                  rec.inventory_position, rec.backorder_total,
                  rec.orders_placed, rec.deliveries);
    return buf;
}

}  // namespace fillrate
