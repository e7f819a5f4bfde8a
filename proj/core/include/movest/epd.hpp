#pragma once

#include <cstdint>
#include <vector>

namespace movest {

/// Exponential power distribution member: density proportional to
/// exp(-|(x - mu)/sigma|^kappa / kappa). kappa = 2 is Gaussian with
/// standard deviation sigma, kappa = 1 is Laplace with scale sigma.
struct EpdParams {
    double kappa;
    double mu;
    double sigma;

    EpdParams(double kappa, double mu, double sigma);
};

/// ln of the normalization C(kappa)/1 = kappa^{-1/kappa} / (2 Gamma(1 + 1/kappa)),
/// i.e. the density at x is exp(log_norm_const(kappa)) / sigma at the mode.
double log_norm_const(double kappa);

double pdf(const EpdParams& p, double x);

/// Log-density computed in log space; no overflow for |x - mu|/sigma up to 1e3.
double log_pdf(const EpdParams& p, double x);

/// CDF via the regularized incomplete gamma function; F(mu) = 1/2.
double cdf(const EpdParams& p, double x);

/// Inverse CDF for q in (0, 1); quantile(0.5) = mu.
double quantile(const EpdParams& p, double q);

/// n i.i.d. draws, x = mu + s * sigma * (kappa G)^{1/kappa} with
/// G ~ Gamma(1/kappa, 1) and s a uniform sign. Deterministic per seed.
std::vector<double> sample(const EpdParams& p, std::size_t n, std::uint64_t seed);

/// kappa^{2/kappa} Gamma(3/kappa) / Gamma(1/kappa) * sigma^2.
double variance_of(const EpdParams& p);

/// Partial derivatives of log_pdf in (kappa, mu, sigma).
/// At x == mu with kappa <= 1 the kappa/mu components are not defined;
/// they are reported as 0 with `singular` set.
struct EpdGrad {
    double dkappa;
    double dmu;
    double dsigma;
    bool singular;
};

EpdGrad log_pdf_grad(const EpdParams& p, double x);

}  // namespace movest
