#include "fillrate/normal.hpp"

#include <cmath>
#include <numbers>

namespace fillrate {

double std_normal_pdf(double z) {
    static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

namespace {
double logistic_y(double z) { return 0.7988 * z * (1.0 + 0.04417 * z * z); }
}  // namespace

double std_normal_cdf_approx(double z) {
    // Negative z goes through the reflection so Phi(-z) + Phi(z) == 1
    // holds exactly: the result for z >= 0 lies in [0.5, 1] and 1 - v is
    // then an exact subtraction.
    if (z < 0.0) return 1.0 - std_normal_cdf_approx(-z);
    // 1 / (1 + e^(-2y)) rather than e^(2y)/(1 + e^(2y)): same value,
    // no overflow for large z.
    return 1.0 / (1.0 + std::exp(-2.0 * logistic_y(z)));
}

double std_normal_cdf_exact(double z) {
    return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0);
}

double std_normal_cdf(double z, NormalCdf kind) {
    return kind == NormalCdf::LogisticApprox ? std_normal_cdf_approx(z)
                                             : std_normal_cdf_exact(z);
}

double std_normal_sf(double z, NormalCdf kind) {
    if (kind == NormalCdf::LogisticApprox)
        return 1.0 / (1.0 + std::exp(2.0 * logistic_y(z)));
    return 0.5 * std::erfc(z * std::numbers::sqrt2 / 2.0);
}

double normal_loss(double z, NormalCdf kind) {
    return std_normal_pdf(z) - z * std_normal_sf(z, kind);
}

double normal_loss_second(double z, NormalCdf kind) {
    return (1.0 + z * z) * std_normal_sf(z, kind) - z * std_normal_pdf(z);
}

}  // namespace fillrate
