#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fillrate/config.hpp"
#include "fillrate/models.hpp"
#include "fillrate/reference.hpp"
#include "fillrate/table_io.hpp"
#include "fillrate/validation.hpp"
#include "fillrate/version.hpp"
#include "json.hpp"

namespace {

using namespace fillrate;

struct CliOptions {
    std::string config_path;
    std::optional<std::string> model, mode, format, out;
    std::optional<double> demand_mean, demand_std, lead_min, lead_max;
    std::optional<double> rop, roq, review_period, beta, initial_on_hand;
    std::optional<int> horizon, reps;
    std::optional<std::uint64_t> seed;
    bool exact_cdf = false;
    bool truncate_negative = false;
    bool deliver_after_demand = false;
    bool json = false;
    std::string trace_path;
    std::string table = "all";
    int threads = 0;
};

void add_system_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--config", o.config_path, "key=value config file");
    cmd->add_option("--model", o.model, "conventional | undershoot");
    cmd->add_option("--mode", o.mode, "backorder | lostsales");
    cmd->add_option("--demand-mean", o.demand_mean, "mean demand per day");
    cmd->add_option("--demand-std", o.demand_std, "demand std per day");
    cmd->add_option("--lead-min", o.lead_min, "min lead time, days");
    cmd->add_option("--lead-max", o.lead_max, "max lead time, days");
    cmd->add_option("--rop", o.rop, "reorder point");
    cmd->add_option("--roq", o.roq, "reorder quantity");
    cmd->add_option("--review-period", o.review_period, "review interval, days");
    cmd->add_flag("--exact-cdf", o.exact_cdf,
                  "use the erf-based normal CDF instead of the logistic fit");
}

RunConfig resolve(const CliOptions& o) {
    RunConfig cfg;
    if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
    if (o.model) cfg.model = parse_model(*o.model);
    if (o.mode) cfg.mode = parse_mode(*o.mode);
    if (o.demand_mean) cfg.demand_mean = *o.demand_mean;
    if (o.demand_std) cfg.demand_std = *o.demand_std;
    if (o.lead_min) cfg.lead_time_min = *o.lead_min;
    if (o.lead_max) cfg.lead_time_max = *o.lead_max;
    if (o.rop) cfg.rop = *o.rop;
    if (o.roq) cfg.roq = *o.roq;
    if (o.review_period) cfg.review_period = *o.review_period;
    if (o.beta) cfg.beta_target = *o.beta;
    if (o.initial_on_hand) cfg.initial_on_hand = *o.initial_on_hand;
    if (o.horizon) cfg.horizon_days = *o.horizon;
    if (o.reps) cfg.replications = *o.reps;
    if (o.seed) cfg.seed = *o.seed;
    if (o.format) cfg.format = *o.format;
    if (o.out) cfg.out = *o.out;
    validate_config(cfg);
    return cfg;
}

NormalCdf cdf_of(const CliOptions& o) {
    return o.exact_cdf ? NormalCdf::Erf : NormalCdf::LogisticApprox;
}

ModelPrediction forward_predict(const RunConfig& cfg, NormalCdf cdf) {
    return cfg.model == ModelKind::Conventional
               ? predict_conventional(cfg.demand(), cfg.lead_time(), cfg.rop,
                                      cfg.roq, cfg.mode, cdf)
               : predict_undershoot(cfg.demand(), cfg.lead_time(), cfg.rop,
                                    cfg.roq, cfg.review_period, cfg.mode, cdf);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int cmd_predict(const CliOptions& o) {
    const RunConfig cfg = resolve(o);
    const ModelPrediction p = forward_predict(cfg, cdf_of(o));
    if (o.json) {
        nlohmann::json j{{"model", model_name(cfg.model)},
                         {"mode", mode_name(cfg.mode)},
                         {"lambda", p.lambda},
                         {"expected_shortage", p.expected_shortage},
                         {"beta", p.beta},
                         {"cycle_stock", p.cycle_stock},
                         {"safety_stock", p.safety_stock},
                         {"rop", p.rop}};
        if (p.expected_undershoot) j["expected_undershoot"] = *p.expected_undershoot;
        std::printf("%s\n", j.dump(2).c_str());
        return 0;
    }
    std::printf("model:               %s\n", model_name(cfg.model).c_str());
    std::printf("mode:                %s\n", mode_name(cfg.mode).c_str());
    std::printf("lambda:              %.6f\n", p.lambda);
    std::printf("expected_shortage:   %.6f\n", p.expected_shortage);
    if (p.expected_undershoot)
        std::printf("expected_undershoot: %.6f\n", *p.expected_undershoot);
    std::printf("beta:                %.6f  (%.1f%%)\n", p.beta, round_pct(p.beta));
    std::printf("cycle_stock:         %.6f\n", p.cycle_stock);
    std::printf("safety_stock:        %.6f\n", p.safety_stock);
    std::printf("rop:                 %.6f\n", p.rop);
    return 0;
}

int cmd_solve(const CliOptions& o) {
    const RunConfig cfg = resolve(o);
    if (!cfg.beta_target)
        throw ConfigError("config key 'beta_target': required for solve");
    const double target = *cfg.beta_target;
    const NormalCdf cdf = cdf_of(o);

    double lambda = 0.0;
    Policy policy;
    double beta_check = 0.0;
    if (cfg.model == ModelKind::Conventional) {
        const LeadTimeDemandMoments m =
            lead_time_demand_moments(cfg.demand(), cfg.lead_time());
        lambda = conventional_solve_lambda(target, cfg.roq, m, cfg.mode, cdf);
        policy = policy_from_lambda(lambda, m, cfg.roq);
        beta_check = conventional_beta(
            cfg.roq, conventional_expected_shortage(m.sigma, lambda, cdf), cfg.mode);
    } else {
        const ReviewMoments rm =
            review_moments(cfg.demand(), cfg.lead_time(), cfg.review_period);
        lambda = undershoot_solve_lambda(target, cfg.roq, rm, cfg.mode, cdf);
        policy.cycle_stock = rm.mu_r + rm.mu_lt;
        policy.safety_stock = lambda * rm.combined_sigma();
        policy.rop = policy.cycle_stock + policy.safety_stock;
        beta_check = undershoot_beta(
            cfg.roq, expected_undershoot(rm),
            undershoot_expected_shortage(rm, lambda, cdf), cfg.mode);
    }

    if (o.json) {
        nlohmann::json j{{"model", model_name(cfg.model)},
                         {"mode", mode_name(cfg.mode)},
                         {"beta_target", target},
                         {"lambda", lambda},
                         {"cycle_stock", policy.cycle_stock},
                         {"safety_stock", policy.safety_stock},
                         {"rop", policy.rop},
                         {"beta_check", beta_check}};
        std::printf("%s\n", j.dump(2).c_str());
        return 0;
    }
    std::printf("model:        %s\n", model_name(cfg.model).c_str());
    std::printf("mode:         %s\n", mode_name(cfg.mode).c_str());
    std::printf("beta_target:  %.6f\n", target);
    std::printf("lambda:       %.6f\n", lambda);
    std::printf("cycle_stock:  %.6f\n", policy.cycle_stock);
    std::printf("safety_stock: %.6f\n", policy.safety_stock);
    std::printf("rop:          %.6f\n", policy.rop);
    std::printf("beta_check:   %.6f\n", beta_check);
    return 0;
}

SimConfig sim_config_from(const RunConfig& cfg, const CliOptions& o) {
    SimConfig sim;
    sim.demand = cfg.demand();
    sim.lead_time = cfg.lead_time();
    sim.rop = cfg.rop;
    sim.roq = cfg.roq;
    sim.mode = cfg.mode;
    sim.horizon_days = cfg.horizon_days;
    sim.initial_on_hand = cfg.initial_on_hand;
    sim.truncate_negative_demand = o.truncate_negative;
    sim.deliver_after_demand = o.deliver_after_demand;
    return sim;
}

int cmd_simulate(const CliOptions& o) {
    const RunConfig cfg = resolve(o);
    const SimConfig sim = sim_config_from(cfg, o);

    if (!o.trace_path.empty()) {
        std::ofstream trace(o.trace_path);
        if (!trace) throw std::runtime_error("cannot write '" + o.trace_path + "'");
        trace << trace_header() << '\n';
        SimConfig first = sim;
        first.seed = RandomStream::derive(cfg.seed, 0);
        run_replication(first, [&](const DayRecord& rec) {
            trace << trace_row(rec) << '\n';
        });
    }

    if (cfg.replications == 1) {
        SimConfig single = sim;
        single.seed = RandomStream::derive(cfg.seed, 0);
        const SimResult r = run_replication(single);
        if (!r.beta_defined)
            throw std::runtime_error("degenerate run: total demand is zero, beta undefined");
        if (o.json) {
            nlohmann::json j{{"mode", mode_name(cfg.mode)},
                             {"replications", 1},
                             {"mean_beta", r.beta},
                             {"std_beta", nullptr}};
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("mode:          %s\n", mode_name(cfg.mode).c_str());
            std::printf("replications:  1\n");
            std::printf("mean_beta:     %.6f\n", r.beta);
            std::printf("std_beta:      undefined (single replication)\n");
        }
        if (!cfg.out.empty()) write_text(cfg.out, "replication,beta\n0," +
                                                      std::to_string(r.beta) + "\n");
        return 0;
    }

    Scenario scenario{cfg.model, cfg.mode, sim, cfg.review_period};
    const ReplicationStats stats =
        run_replications(scenario, cfg.replications, cfg.seed, o.threads);

    if (!cfg.out.empty()) {
        std::ostringstream csv;
        csv << "replication,beta\n";
        for (int i = 0; i < stats.n; ++i) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%d,%.9f\n", i,
                          stats.per_replication_betas[static_cast<std::size_t>(i)]);
            csv << buf;
        }
        write_text(cfg.out, csv.str());
    }

    if (o.json) {
        nlohmann::json j{{"mode", mode_name(cfg.mode)},
                         {"replications", stats.n},
                         {"mean_beta", stats.mean_beta},
                         {"std_beta", stats.std_beta},
                         {"seed", cfg.seed}};
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("mode:          %s\n", mode_name(cfg.mode).c_str());
        std::printf("replications:  %d\n", stats.n);
        std::printf("mean_beta:     %.6f\n", stats.mean_beta);
        std::printf("std_beta:      %.6f\n", stats.std_beta);
    }
    return 0;
}

int cmd_validate(const CliOptions& o) {
    const RunConfig cfg = resolve(o);

    std::vector<TableId> tables;
    if (o.table == "all") {
        tables = {TableId::ConvBackorder, TableId::ConvLostSales,
                  TableId::UndershootBackorder, TableId::UndershootLostSales};
    } else {
        tables = {parse_table_id(o.table)};
    }
    if (!cfg.out.empty() && tables.size() > 1)
        throw std::runtime_error("--out requires a single --table");

    GridOptions opts;
    opts.replications = cfg.replications;
    opts.master_seed = cfg.seed;
    opts.cdf = cdf_of(o);
    opts.truncate_negative_demand = o.truncate_negative;
    opts.threads = o.threads;
    const StudyParams study;

    const TableFormat format = parse_table_format(cfg.format);
    bool ok = true;
    for (TableId id : tables) {
        const ValidationTable table = run_grid(id, opts, study);
        const std::string text = emit_table(table, format);
        const std::string manifest = manifest_json(table, opts, study);
        if (!cfg.out.empty()) {
            write_text(cfg.out, text);
            write_text(cfg.out + ".manifest.json", manifest);
        } else {
            if (tables.size() > 1) std::printf("# %s\n", table_name(id).c_str());
            std::printf("%s", text.c_str());
            if (tables.size() > 1) std::printf("\n");
            std::fprintf(stderr, "%s", manifest.c_str());
        }

        const std::span<const ReferenceRow> ref = reference_rows(id);
        int flips = 0;
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            if (table.rows[i].matches != ref[i].matches) ++flips;
        std::fprintf(stderr, "%s: %d of %zu match flags differ from reference\n",
                     table_name(id).c_str(), flips, table.rows.size());
        if (flips > 1) ok = false;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reorder-point fill-rate models and simulator"};
    app.set_version_flag("--version", fillrate::kVersion);
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* predict = app.add_subcommand(
        "predict", "fill rate predicted by a model for a given policy");
    add_system_options(predict, opt);
    predict->add_flag("--json", opt.json, "machine-readable output");

    CLI::App* solve = app.add_subcommand(
        "solve", "safety stock factor and reorder point for a target fill rate");
    add_system_options(solve, opt);
    solve->add_option("--beta", opt.beta, "target fill rate in (0,1)");
    solve->add_flag("--json", opt.json, "machine-readable output");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "replicate the stocking facility simulation");
    add_system_options(simulate, opt);
    simulate->add_option("--reps", opt.reps, "number of replications");
    simulate->add_option("--seed", opt.seed, "master seed");
    simulate->add_option("--horizon-days", opt.horizon, "days per replication");
    simulate->add_option("--initial-on-hand", opt.initial_on_hand,
                         "initial stock (default rop + roq)");
    simulate->add_option("--trace", opt.trace_path,
                         "write per-day trace CSV of replication 0");
    simulate->add_option("--out", opt.out, "write per-replication betas CSV");
    simulate->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    simulate->add_flag("--truncate-negative-demand", opt.truncate_negative,
                       "clamp negative demand draws to zero");
    simulate->add_flag("--deliver-after-demand", opt.deliver_after_demand,
                       "apply same-day deliveries after demand (sensitivity)");
    simulate->add_flag("--json", opt.json, "machine-readable output");

    CLI::App* validate = app.add_subcommand(
        "validate", "regenerate the model-vs-simulation validation tables");
    add_system_options(validate, opt);
    validate->add_option("--table", opt.table,
                         "conv-backorder | conv-lostsales | undershoot-backorder | "
                         "undershoot-lostsales | all");
    validate->add_option("--reps", opt.reps, "replications per cell");
    validate->add_option("--seed", opt.seed, "master seed");
    validate->add_option("--format", opt.format, "markdown | csv");
    validate->add_option("--out", opt.out, "output path (single table only)");
    validate->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    validate->add_flag("--truncate-negative-demand", opt.truncate_negative,
                       "clamp negative demand draws to zero");

    CLI11_PARSE(app, argc, argv);

    try {
        if (predict->parsed()) return cmd_predict(opt);
        if (solve->parsed()) return cmd_solve(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (validate->parsed()) return cmd_validate(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
