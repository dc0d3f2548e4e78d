#include "fillrate/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fillrate/version.hpp"
#include "json.hpp"

namespace fillrate {

namespace {

std::string pct_str(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", round_pct(fraction));
    return buf;
}

std::string num_str(double v) {
    char buf[32];
    if (v == std::floor(v) && std::abs(v) < 1e15)
        std::snprintf(buf, sizeof(buf), "%.0f", v);
    else
        std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

}  // namespace

TableFormat parse_table_format(const std::string& name) {
    if (name == "markdown") return TableFormat::Markdown;
    if (name == "csv") return TableFormat::Csv;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected markdown or csv)");
}

double round_pct(double fraction) {
    return std::floor(fraction * 1000.0 + 0.5) / 10.0;
}

std::string emit_table(const ValidationTable& table, TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        out << "sigma_d,q,model_beta_pct,sim_mean_pct,sim_std_pct,matches\n";
        for (const ValidationRow& r : table.rows) {
            out << num_str(r.sigma_d) << ',' << num_str(r.q) << ','
                << pct_str(r.model_beta) << ',' << pct_str(r.sim_mean_beta) << ','
                << pct_str(r.sim_std_beta) << ',' << (r.matches ? "yes" : "no")
                << '\n';
        }
        return out.str();
    }

    out << "| sigma_d | q | model beta % | sim mean % | sim std % | matches |\n"
        << "|--------:|--:|-------------:|-----------:|----------:|:--------|\n";
    for (const ValidationRow& r : table.rows) {
        out << "| " << num_str(r.sigma_d) << " | " << num_str(r.q) << " | "
            << pct_str(r.model_beta) << " | " << pct_str(r.sim_mean_beta)
            << " | " << pct_str(r.sim_std_beta) << " | "
            << (r.matches ? "Yes" : "No") << " |\n";
    }
    return out.str();
}

ValidationTable parse_table_csv(const std::string& csv) {
    ValidationTable table;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty table csv");
    if (line != "sigma_d,q,model_beta_pct,sim_mean_pct,sim_std_pct,matches")
        throw std::invalid_argument("unexpected table csv header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 6)
            throw std::invalid_argument("bad table csv row: " + line);
        ValidationRow r;
        r.sigma_d = std::stod(f[0]);
        r.q = std::stod(f[1]);
        r.model_beta = std::stod(f[2]) / 100.0;
        r.sim_mean_beta = std::stod(f[3]) / 100.0;
        r.sim_std_beta = std::stod(f[4]) / 100.0;
        if (f[5] == "yes")
            r.matches = true;
        else if (f[5] == "no")
            r.matches = false;
        else
            throw std::invalid_argument("bad matches flag: " + f[5]);
        table.rows.push_back(r);
    }
    return table;
}

std::string manifest_json(const ValidationTable& table, const GridOptions& opts,
                          const StudyParams& study) {
    nlohmann::json j;
    j["table"] = table_name(table.id);
    j["replications"] = opts.replications;
    j["master_seed"] = opts.master_seed;
    j["cdf"] = opts.cdf == NormalCdf::LogisticApprox ? "logistic-approx" : "erf";
    j["truncate_negative_demand"] = opts.truncate_negative_demand;
    j["parameters"] = {
        {"demand_mean", study.demand_mean},
        {"demand_stds", study.demand_stds},
        {"qs", study.qs},
        {"lead_time_min", study.lead_time.min_days},
        {"lead_time_max", study.lead_time.max_days},
        {"rop", study.rop},
        {"horizon_days", study.horizon_days},
        {"review_period", study.review_period},
    };
    j["version"] = kVersion;
    return j.dump(2) + "\n";
}

}  // namespace fillrate
