#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fillrate/types.hpp"

namespace fillrate {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Run settings shared by the CLI subcommands. Defaults reproduce the
/// validation study's base system (mean demand 500/day, lead time
/// Uniform(7,13), reorder point 5000, daily review, one-year horizon).
struct RunConfig {
    double demand_mean = 500.0;
    double demand_std = 200.0;
    double lead_time_min = 7.0;
    double lead_time_max = 13.0;
    double rop = 5000.0;
    double roq = 1000.0;
    double review_period = 1.0;
    UnfulfilledDemandMode mode = UnfulfilledDemandMode::Backorder;
    ModelKind model = ModelKind::Conventional;
    int horizon_days = 365;
    int replications = 100;
    std::uint64_t seed = 2024;
    std::optional<double> beta_target;     // required by `solve` only
    std::optional<double> initial_on_hand; // defaults to rop + roq
    std::string format = "markdown";
    std::string out;  // empty = stdout

    DemandSpec demand() const { return {demand_mean, demand_std}; }
    LeadTimeDistribution lead_time() const { return {lead_time_min, lead_time_max}; }
};

UnfulfilledDemandMode parse_mode(const std::string& name);
ModelKind parse_model(const std::string& name);
std::string mode_name(UnfulfilledDemandMode mode);
std::string model_name(ModelKind model);

/// Set one key. Throws ConfigError naming the key for unknown keys and
/// unparseable values.
void set_config_key(RunConfig& cfg, const std::string& key,
                    const std::string& value);

/// Parse a flat key=value document ('#' starts a comment, blank lines
/// ignored, duplicate keys rejected).
RunConfig parse_config_text(const std::string& text);

RunConfig load_config_file(const std::string& path);

/// Cross-field invariant check; throws ConfigError naming the first
/// offending key.
void validate_config(const RunConfig& cfg);

}  // namespace fillrate
