#include "fillrate/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fillrate {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + value + "'");
    }
}

long long parse_integer(const std::string& key, const std::string& value) {
    long long v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': not an integer: '" + value + "'");
    return v;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': not a seed: '" + value + "'");
    return v;
}

}  // namespace

UnfulfilledDemandMode parse_mode(const std::string& name) {
    if (name == "backorder") return UnfulfilledDemandMode::Backorder;
    if (name == "lostsales") return UnfulfilledDemandMode::LostSales;
    throw ConfigError("config key 'mode': expected backorder or lostsales, got '" +
                      name + "'");
}

ModelKind parse_model(const std::string& name) {
    if (name == "conventional") return ModelKind::Conventional;
    if (name == "undershoot") return ModelKind::Undershoot;
    throw ConfigError("config key 'model': expected conventional or undershoot, got '" +
                      name + "'");
}

std::string mode_name(UnfulfilledDemandMode mode) {
    return mode == UnfulfilledDemandMode::Backorder ? "backorder" : "lostsales";
}

std::string model_name(ModelKind model) {
    return model == ModelKind::Conventional ? "conventional" : "undershoot";
}

void set_config_key(RunConfig& cfg, const std::string& key,
                    const std::string& value) {
    if (key == "demand_mean") cfg.demand_mean = parse_double(key, value);
    else if (key == "demand_std") cfg.demand_std = parse_double(key, value);
    else if (key == "lead_time_min") cfg.lead_time_min = parse_double(key, value);
    else if (key == "lead_time_max") cfg.lead_time_max = parse_double(key, value);
    else if (key == "rop") cfg.rop = parse_double(key, value);
    else if (key == "roq") cfg.roq = parse_double(key, value);
    else if (key == "review_period") cfg.review_period = parse_double(key, value);
    else if (key == "mode") cfg.mode = parse_mode(value);
    else if (key == "model") cfg.model = parse_model(value);
    else if (key == "horizon_days") cfg.horizon_days = static_cast<int>(parse_integer(key, value));
    else if (key == "replications") cfg.replications = static_cast<int>(parse_integer(key, value));
    else if (key == "seed") cfg.seed = parse_seed(key, value);
    else if (key == "beta_target") cfg.beta_target = parse_double(key, value);
    else if (key == "initial_on_hand") cfg.initial_on_hand = parse_double(key, value);
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        if (!seen.insert(key).second)
            throw ConfigError("duplicate config key '" + key + "'");
        set_config_key(cfg, key, value);
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.demand_mean > 0.0))
        throw ConfigError("config key 'demand_mean': must be > 0");
    if (!(cfg.demand_std >= 0.0))
        throw ConfigError("config key 'demand_std': must be >= 0");
    if (!(cfg.lead_time_min > 0.0))
        throw ConfigError("config key 'lead_time_min': must be > 0");
    if (!(cfg.lead_time_max >= cfg.lead_time_min))
        throw ConfigError("config key 'lead_time_max': must be >= lead_time_min");
    if (!(cfg.rop >= 0.0)) throw ConfigError("config key 'rop': must be >= 0");
    if (!(cfg.roq > 0.0)) throw ConfigError("config key 'roq': must be > 0");
    if (!(cfg.review_period > 0.0))
        throw ConfigError("config key 'review_period': must be > 0");
    if (cfg.horizon_days < 1)
        throw ConfigError("config key 'horizon_days': must be >= 1");
    if (cfg.replications < 1)
        throw ConfigError("config key 'replications': must be >= 1");
    if (cfg.beta_target && !(*cfg.beta_target > 0.0 && *cfg.beta_target < 1.0))
        throw ConfigError("config key 'beta_target': must be in (0, 1)");
    if (cfg.initial_on_hand && !(*cfg.initial_on_hand >= 0.0))
        throw ConfigError("config key 'initial_on_hand': must be >= 0");
    if (cfg.format != "markdown" && cfg.format != "csv")
        throw ConfigError("config key 'format': expected markdown or csv");
}

}  // namespace fillrate
