#pragma once

namespace movest::sf {

/// Natural log of the Euler gamma function, Lanczos approximation.
/// Requires a > 0; relative error below 1e-12 for a in [1e-3, 1e3].
double ln_gamma(double a);

/// Regularized lower incomplete gamma function P(a, z) in [0, 1],
/// monotone nondecreasing in z. Requires a > 0, z >= 0.
double reg_lower_gamma(double a, double z);

/// Regularized upper incomplete gamma function Q(a, z) = 1 - P(a, z).
double reg_upper_gamma(double a, double z);

/// Inverse of P(a, .): returns z >= 0 with P(a, z) = p, for p in [0, 1).
/// Bracketed bisection refined by Newton steps; |P(a, z) - p| <= 1e-9.
double inv_reg_lower_gamma(double a, double p);

/// Inverse of Q(a, .) for q in (0, 1]: z with Q(a, z) = q, accurate in the
/// far tail where q is tiny (Newton on ln Q keeps relative precision).
double inv_reg_upper_gamma(double a, double q);

/// Digamma psi(a) for a > 0; absolute error below 1e-10 for a in [1e-3, 1e3].
double digamma(double a);

}  // namespace movest::sf
