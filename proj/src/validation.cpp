#include "fillrate/validation.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fillrate {

namespace {

int resolve_thread_count(int requested, int jobs) {
    int threads = requested > 0
                      ? requested
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    return std::min(threads, jobs);
}

}  // namespace

ReplicationStats run_replications(const Scenario& scenario, int n,
                                  std::uint64_t master_seed, int threads) {
    if (n < 2) throw std::invalid_argument("replication count must be >= 2");
    scenario.validate();

    std::vector<double> betas(static_cast<std::size_t>(n), 0.0);
    std::atomic<int> next{0};
    std::atomic<int> undefined_at{-1};

    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            SimConfig cfg = scenario.sim;
            cfg.seed = RandomStream::derive(master_seed, static_cast<std::uint64_t>(i));
            const SimResult r = run_replication(cfg);
            if (!r.beta_defined) {
                undefined_at.store(i);
                return;
            }
            betas[static_cast<std::size_t>(i)] = r.beta;
        }
    };

    const int thread_count = resolve_thread_count(threads, n);
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (undefined_at.load() >= 0) {
        std::ostringstream msg;
        msg << "replication " << undefined_at.load()
            << " produced zero total demand; beta is undefined";
        throw std::runtime_error(msg.str());
    }

    ReplicationStats stats;
    stats.n = n;
    stats.per_replication_betas = std::move(betas);
    const double sum = std::accumulate(stats.per_replication_betas.begin(),
                                       stats.per_replication_betas.end(), 0.0);
    stats.mean_beta = sum / n;
    double ss = 0.0;
    for (double b : stats.per_replication_betas) {
        const double d = b - stats.mean_beta;
        ss += d * d;
    }
    stats.std_beta = std::sqrt(ss / (n - 1));
    return stats;
}

bool two_sigma_match(double model_beta, const ReplicationStats& stats) {
    if (stats.n < 2) throw std::invalid_argument("need at least 2 replications");
    return std::abs(model_beta - stats.mean_beta) <= 2.0 * stats.std_beta;
}

ModelKind table_model(TableId id) {
    return (id == TableId::ConvBackorder || id == TableId::ConvLostSales)
               ? ModelKind::Conventional
               : ModelKind::Undershoot;
}

UnfulfilledDemandMode table_mode(TableId id) {
    return (id == TableId::ConvBackorder || id == TableId::UndershootBackorder)
               ? UnfulfilledDemandMode::Backorder
               : UnfulfilledDemandMode::LostSales;
}

std::string table_name(TableId id) {
    switch (id) {
        case TableId::ConvBackorder: return "conv-backorder";
        case TableId::ConvLostSales: return "conv-lostsales";
        case TableId::UndershootBackorder: return "undershoot-backorder";
        case TableId::UndershootLostSales: return "undershoot-lostsales";
    }
    throw std::logic_error("unreachable table id");
}

TableId parse_table_id(const std::string& name) {
    for (TableId id : {TableId::ConvBackorder, TableId::ConvLostSales,
                       TableId::UndershootBackorder, TableId::UndershootLostSales})
        if (table_name(id) == name) return id;
    throw std::invalid_argument("unknown table '" + name +
                                "' (expected conv-backorder, conv-lostsales, "
                                "undershoot-backorder or undershoot-lostsales)");
}

ValidationTable run_grid(TableId id, const GridOptions& opts,
                         const StudyParams& study) {
    const ModelKind model = table_model(id);
    const UnfulfilledDemandMode mode = table_mode(id);
    // Cell seeds hang off (mode, sigma index, q index) only, so the two
    // tables for one mode reuse identical simulation statistics.
    const std::uint64_t mode_seed =
        RandomStream::derive(opts.master_seed, mode == UnfulfilledDemandMode::Backorder ? 0 : 1);

    ValidationTable table;
    table.id = id;
    for (std::size_t is = 0; is < study.demand_stds.size(); ++is) {
        const std::uint64_t sigma_seed = RandomStream::derive(mode_seed, is);
        for (std::size_t iq = 0; iq < study.qs.size(); ++iq) {
            const double sigma_d = study.demand_stds[is];
            const double q = study.qs[iq];

            Scenario scenario;
            scenario.model = model;
            scenario.mode = mode;
            scenario.review_period = study.review_period;
            scenario.sim.demand = {study.demand_mean, sigma_d};
            scenario.sim.lead_time = study.lead_time;
            scenario.sim.rop = study.rop;
            scenario.sim.roq = q;
            scenario.sim.mode = mode;
            scenario.sim.horizon_days = study.horizon_days;
            scenario.sim.truncate_negative_demand = opts.truncate_negative_demand;

            const ReplicationStats stats =
                run_replications(scenario, opts.replications,
                                 RandomStream::derive(sigma_seed, iq), opts.threads);

            const ModelPrediction pred =
                model == ModelKind::Conventional
                    ? predict_conventional(scenario.sim.demand, scenario.sim.lead_time,
                                           study.rop, q, mode, opts.cdf)
                    : predict_undershoot(scenario.sim.demand, scenario.sim.lead_time,
                                         study.rop, q, study.review_period, mode,
                                         opts.cdf);

            ValidationRow row;
            row.sigma_d = sigma_d;
            row.q = q;
            row.model_beta = pred.beta;
            row.sim_mean_beta = stats.mean_beta;
            row.sim_std_beta = stats.std_beta;
            row.matches = two_sigma_match(pred.beta, stats);
            table.rows.push_back(row);
        }
    }
    return table;
}

namespace {

double normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

struct ShortageIntegrand {
    double mu, sigma, rop;
    int power;
    double operator()(double x) const {
        const double diff = x - rop;
        const double w = power == 1 ? diff : diff * diff;
        return w * normal_pdf(x, mu, sigma);
    }
};

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const ShortageIntegrand& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol,
                     int depth) {
    if (depth <= 0)
        throw std::runtime_error("shortage quadrature failed to converge");
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double numeric_shortage_oracle(double mu, double sigma, double rop, int power) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
    if (power != 1 && power != 2)
        throw std::invalid_argument("power must be 1 or 2");
    const double upper = mu + 12.0 * sigma;  // truncated tail mass < 1e-30
    if (rop >= upper) return 0.0;

    const ShortageIntegrand f{mu, sigma, rop, power};
    const double a = rop;
    const double b = upper;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    const double scale = std::max(std::abs(whole), 1e-300);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, 1e-8 * scale, 60);
}

}  // namespace fillrate
