#pragma once

#include "fillrate/normal.hpp"
#include "fillrate/types.hpp"

namespace fillrate {

// ---------------------------------------------------------------------------
// Shared moments
// ---------------------------------------------------------------------------

/// mu = mu_D * mu_L, sigma = sqrt(mu_L*sigma_D^2 + mu_D^2*sigma_L^2).
LeadTimeDemandMoments lead_time_demand_moments(const DemandSpec& demand,
                                               const LeadTimeDistribution& lead_time);

/// Review-period and lead-time demand moments for review interval
/// `review_period` days: mu_R = mu_D*R, sigma_R = sigma_D*sqrt(R).
ReviewMoments review_moments(const DemandSpec& demand,
                             const LeadTimeDistribution& lead_time,
                             double review_period);

// ---------------------------------------------------------------------------
// Conventional model (continuous review)
// ---------------------------------------------------------------------------

/// Expected shortage per cycle E = sigma * (phi(lambda) - lambda*(1 - Phi(lambda))).
double conventional_expected_shortage(double sigma, double lambda,
                                      NormalCdf cdf = NormalCdf::LogisticApprox);

/// Fill rate from reorder quantity and expected shortage.
/// Backorder: 1 - E/Q (can go negative or below). Lost sales: Q/(Q + E),
/// always in (0, 1].
double conventional_beta(double q, double expected_shortage,
                         UnfulfilledDemandMode mode);

/// Safety stock factor implied by a reorder point: (rop - mu) / sigma.
/// Throws for sigma == 0 (deterministic system, no finite factor).
double conventional_lambda_from_rop(double rop, const LeadTimeDemandMoments& m);

/// Smallest lambda in [-10, 10] whose predicted fill rate hits beta_target.
/// Bisection on lambda; the fill rate is strictly increasing in lambda.
/// Throws std::domain_error when the target is not attainable in range.
double conventional_solve_lambda(double beta_target, double q,
                                 const LeadTimeDemandMoments& m,
                                 UnfulfilledDemandMode mode,
                                 NormalCdf cdf = NormalCdf::LogisticApprox);

/// CS = max(Q, mu), SS = lambda*sigma, ROP = CS + SS.
Policy policy_from_lambda(double lambda, const LeadTimeDemandMoments& m, double q);

// ---------------------------------------------------------------------------
// Undershoot model (periodic review)
// ---------------------------------------------------------------------------

/// Expected undershoot below the reorder point between reviews:
/// E_U = (mu_R^2 + sigma_R^2) / (2*mu_R).
double expected_undershoot(const ReviewMoments& rm);

/// Expected shortage per cycle
/// E = (sigma_R^2 + sigma_LT^2)/(2*mu_R) * [(1+lambda^2)(1-Phi(lambda)) - lambda*phi(lambda)].
double undershoot_expected_shortage(const ReviewMoments& rm, double lambda,
                                    NormalCdf cdf = NormalCdf::LogisticApprox);

/// lambda = (rop - mu_R - mu_LT) / sqrt(sigma_R^2 + sigma_LT^2).
/// Throws when the combined variance is zero.
double undershoot_lambda_from_rop(double rop, const ReviewMoments& rm);

/// Fill rate from reorder quantity, expected undershoot and shortage.
/// Backorder: 1 - E/(Q + E_U) (can be negative). Lost sales:
/// (Q + E_U)/(Q + E_U + E), always in (0, 1].
double undershoot_beta(double q, double expected_undershoot_value,
                       double expected_shortage, UnfulfilledDemandMode mode);

/// Inverse of the forward prediction, bisection over lambda in [-10, 10].
double undershoot_solve_lambda(double beta_target, double q,
                               const ReviewMoments& rm,
                               UnfulfilledDemandMode mode,
                               NormalCdf cdf = NormalCdf::LogisticApprox);

// ---------------------------------------------------------------------------
// Forward prediction at a given policy
// ---------------------------------------------------------------------------

/// Conventional-model fill rate prediction for a (rop, q) policy.
/// lambda is inverted as (rop - mu)/sigma; sigma == 0 falls back to the
/// deterministic limit E = max(0, mu - rop).
ModelPrediction predict_conventional(const DemandSpec& demand,
                                     const LeadTimeDistribution& lead_time,
                                     double rop, double q,
                                     UnfulfilledDemandMode mode,
                                     NormalCdf cdf = NormalCdf::LogisticApprox);

/// Undershoot-model fill rate prediction for a (rop, q) policy reviewed
/// every `review_period` days. lambda is inverted at the effective
/// replenishment level max(rop, q): when the order quantity exceeds the
/// reorder point, the post-replenishment level, not the reorder point,
/// governs the shortage incurred per cycle.
ModelPrediction predict_undershoot(const DemandSpec& demand,
                                   const LeadTimeDistribution& lead_time,
                                   double rop, double q, double review_period,
                                   UnfulfilledDemandMode mode,
                                   NormalCdf cdf = NormalCdf::LogisticApprox);

}  // namespace fillrate
