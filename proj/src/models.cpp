#include "fillrate/models.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fillrate {

namespace {

constexpr double kLambdaLo = -10.0;
constexpr double kLambdaHi = 10.0;
constexpr double kBetaResidualTol = 1e-9;
constexpr int kMaxBisectIters = 200;

void require_positive_q(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("reorder quantity must be > 0");
}

/// Bisection for the lambda at which an increasing beta(lambda) hits target.
double solve_lambda_bisect(const std::function<double(double)>& beta_of_lambda,
                           double beta_target) {
    if (!(beta_target > 0.0 && beta_target < 1.0))
        throw std::invalid_argument("beta target must be in (0, 1)");
    double lo = kLambdaLo;
    double hi = kLambdaHi;
    const double beta_lo = beta_of_lambda(lo);
    const double beta_hi = beta_of_lambda(hi);
    if (beta_target < beta_lo || beta_target > beta_hi) {
        std::ostringstream msg;
        msg << "beta target " << beta_target << " outside achievable range ["
            << beta_lo << ", " << beta_hi << "] for lambda in [-10, 10]";
        throw std::domain_error(msg.str());
    }
    for (int it = 0; it < kMaxBisectIters; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double beta_mid = beta_of_lambda(mid);
        if (std::abs(beta_mid - beta_target) < kBetaResidualTol) return mid;
        if (beta_mid < beta_target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

LeadTimeDemandMoments lead_time_demand_moments(const DemandSpec& demand,
                                               const LeadTimeDistribution& lead_time) {
    demand.validate();
    lead_time.validate();
    const double mu_l = lead_time.mean_days();
    const double sigma_l = lead_time.std_days();
    LeadTimeDemandMoments m;
    m.mu = demand.mean_per_period * mu_l;
    m.sigma = std::sqrt(mu_l * demand.std_per_period * demand.std_per_period +
                        demand.mean_per_period * demand.mean_per_period * sigma_l * sigma_l);
    return m;
}

ReviewMoments review_moments(const DemandSpec& demand,
                             const LeadTimeDistribution& lead_time,
                             double review_period) {
    if (!(review_period > 0.0))
        throw std::invalid_argument("review_period must be > 0");
    const LeadTimeDemandMoments lt = lead_time_demand_moments(demand, lead_time);
    ReviewMoments rm;
    rm.review_period = review_period;
    rm.mu_r = demand.mean_per_period * review_period;
    rm.sigma_r = demand.std_per_period * std::sqrt(review_period);
    rm.mu_lt = lt.mu;
    rm.sigma_lt = lt.sigma;
    return rm;
}

double conventional_expected_shortage(double sigma, double lambda, NormalCdf cdf) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
    if (sigma == 0.0) return 0.0;
    return sigma * normal_loss(lambda, cdf);
}

double conventional_beta(double q, double expected_shortage,
                         UnfulfilledDemandMode mode) {
    require_positive_q(q);
    if (!(expected_shortage >= 0.0))
        throw std::invalid_argument("expected shortage must be >= 0");
    if (mode == UnfulfilledDemandMode::Backorder)
        return 1.0 - expected_shortage / q;
    return q / (q + expected_shortage);
}

double conventional_lambda_from_rop(double rop, const LeadTimeDemandMoments& m) {
    if (!(m.sigma > 0.0))
        throw std::invalid_argument(
            "lead-time demand sigma is 0: deterministic system has no safety factor");
    return (rop - m.mu) / m.sigma;
}

double conventional_solve_lambda(double beta_target, double q,
                                 const LeadTimeDemandMoments& m,
                                 UnfulfilledDemandMode mode, NormalCdf cdf) {
    require_positive_q(q);
    if (!(m.sigma > 0.0))
        throw std::invalid_argument("lead-time demand sigma must be > 0 to solve");
    return solve_lambda_bisect(
        [&](double lambda) {
            return conventional_beta(q, conventional_expected_shortage(m.sigma, lambda, cdf), mode);
        },
        beta_target);
}

Policy policy_from_lambda(double lambda, const LeadTimeDemandMoments& m, double q) {
    require_positive_q(q);
    Policy p;
    p.cycle_stock = std::max(q, m.mu);
    p.safety_stock = lambda * m.sigma;
    p.rop = p.cycle_stock + p.safety_stock;
    return p;
}

double expected_undershoot(const ReviewMoments& rm) {
    if (!(rm.mu_r > 0.0))
        throw std::invalid_argument("mu_R must be > 0: zero-demand system is degenerate");
    return (rm.mu_r * rm.mu_r + rm.sigma_r * rm.sigma_r) / (2.0 * rm.mu_r);
}

double undershoot_expected_shortage(const ReviewMoments& rm, double lambda,
                                    NormalCdf cdf) {
    if (!(rm.mu_r > 0.0))
        throw std::invalid_argument("mu_R must be > 0: zero-demand system is degenerate");
    const double combined_var = rm.sigma_r * rm.sigma_r + rm.sigma_lt * rm.sigma_lt;
    return combined_var / (2.0 * rm.mu_r) * normal_loss_second(lambda, cdf);
}

double undershoot_lambda_from_rop(double rop, const ReviewMoments& rm) {
    const double combined = rm.combined_sigma();
    if (!(combined > 0.0))
        throw std::invalid_argument(
            "combined demand variance is 0: deterministic system has no safety factor");
    return (rop - rm.mu_r - rm.mu_lt) / combined;
}

double undershoot_beta(double q, double expected_undershoot_value,
                       double expected_shortage, UnfulfilledDemandMode mode) {
    require_positive_q(q);
    if (!(expected_undershoot_value >= 0.0))
        throw std::invalid_argument("expected undershoot must be >= 0");
    if (!(expected_shortage >= 0.0))
        throw std::invalid_argument("expected shortage must be >= 0");
    const double q_eff = q + expected_undershoot_value;
    if (mode == UnfulfilledDemandMode::Backorder)
        return 1.0 - expected_shortage / q_eff;
    return q_eff / (q_eff + expected_shortage);
}

double undershoot_solve_lambda(double beta_target, double q,
                               const ReviewMoments& rm,
                               UnfulfilledDemandMode mode, NormalCdf cdf) {
    require_positive_q(q);
    const double e_u = expected_undershoot(rm);
    return solve_lambda_bisect(
        [&](double lambda) {
            return undershoot_beta(q, e_u, undershoot_expected_shortage(rm, lambda, cdf), mode);
        },
        beta_target);
}

ModelPrediction predict_conventional(const DemandSpec& demand,
                                     const LeadTimeDistribution& lead_time,
                                     double rop, double q,
                                     UnfulfilledDemandMode mode, NormalCdf cdf) {
    require_positive_q(q);
    const LeadTimeDemandMoments m = lead_time_demand_moments(demand, lead_time);
    ModelPrediction p;
    p.rop = rop;
    if (m.sigma == 0.0) {
        p.lambda = 0.0;
        p.expected_shortage = std::max(0.0, m.mu - rop);
    } else {
        p.lambda = conventional_lambda_from_rop(rop, m);
        p.expected_shortage = conventional_expected_shortage(m.sigma, p.lambda, cdf);
    }
    p.beta = conventional_beta(q, p.expected_shortage, mode);
    p.cycle_stock = std::max(q, m.mu);
    p.safety_stock = p.lambda * m.sigma;
    return p;
}

ModelPrediction predict_undershoot(const DemandSpec& demand,
                                   const LeadTimeDistribution& lead_time,
                                   double rop, double q, double review_period,
                                   UnfulfilledDemandMode mode, NormalCdf cdf) {
    require_positive_q(q);
    const ReviewMoments rm = review_moments(demand, lead_time, review_period);
    const double level = std::max(rop, q);  // effective replenishment level
    ModelPrediction p;
    p.rop = rop;
    p.expected_undershoot = expected_undershoot(rm);
    const double combined = rm.combined_sigma();
    if (combined == 0.0) {
        p.lambda = 0.0;
        const double mean_total = rm.mu_r + rm.mu_lt;
        const double gap = std::max(0.0, mean_total - level);
        p.expected_shortage = gap * gap / (2.0 * rm.mu_r);
    } else {
        p.lambda = undershoot_lambda_from_rop(level, rm);
        p.expected_shortage = undershoot_expected_shortage(rm, p.lambda, cdf);
    }
    p.beta = undershoot_beta(q, *p.expected_undershoot, p.expected_shortage, mode);
    p.cycle_stock = rm.mu_r + rm.mu_lt;
    p.safety_stock = p.lambda * combined;
    return p;
}

}  // namespace fillrate
