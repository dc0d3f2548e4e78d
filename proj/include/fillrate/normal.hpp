#pragma once

namespace fillrate {

/// Which evaluation of the standard normal CDF the models use.
/// LogisticApprox is the default: a logistic curve fit that keeps model
/// output aligned with the published reference tables. Erf is the
/// high-accuracy path used by the cross-check oracles and the
/// --exact-cdf mode.
enum class NormalCdf { LogisticApprox, Erf };

/// Standard normal density (1/sqrt(2*pi)) * exp(-z^2/2).
double std_normal_pdf(double z);

/// Logistic approximation of the standard normal CDF:
/// e^(2y) / (1 + e^(2y)) with y = 0.7988*z*(1 + 0.04417*z^2).
/// Max absolute error about 1.4e-4 on [-4, 4]; exactly odd-symmetric,
/// so Phi(-z) + Phi(z) = 1 holds bit-for-bit.
double std_normal_cdf_approx(double z);

/// Standard normal CDF via erfc.
double std_normal_cdf_exact(double z);

double std_normal_cdf(double z, NormalCdf kind);

/// Survivor function 1 - Phi(z), computed without cancellation at large z.
double std_normal_sf(double z, NormalCdf kind);

/// First-order loss function phi(z) - z*(1 - Phi(z)) = E[(X - z)+] for
/// standard normal X. Positive, strictly decreasing, -> -z as z -> -inf.
double normal_loss(double z, NormalCdf kind);

/// Second-order loss function (1 + z^2)*(1 - Phi(z)) - z*phi(z)
/// = E[((X - z)+)^2] for standard normal X.
double normal_loss_second(double z, NormalCdf kind);

}  // namespace fillrate
