#pragma once

#include <span>
#include <vector>

namespace movest {

/// GARCH(1,1) with Gaussian innovations and constant mean:
/// sigma2_t = omega + alpha (x_{t-1} - mu)^2 + beta sigma2_{t-1}.
struct GarchParams {
    double omega;
    double alpha;
    double beta;
    double mu;

    GarchParams(double omega, double alpha, double beta, double mu);
};

struct GarchFilterResult {
    std::vector<double> variance;     // one-step-ahead sigma2_t
    std::vector<double> log_density;  // per-observation Gaussian log-density
    double mean_loglik;
};

/// Run the variance recursion; sigma2_t depends on x_{t-1} and earlier only.
GarchFilterResult garch_filter(const GarchParams& p,
                               std::span<const double> returns,
                               double sigma2_init);

struct GarchFitResult {
    GarchParams params;
    double mean_loglik;
    bool converged;
};

/// Two-stage MLE: mu fixed to the sample mean, then (omega, alpha, beta)
/// by Nelder-Mead on a log/logistic-transformed unconstrained space with
/// five deterministic multi-starts. sigma2_1 is the sample variance.
GarchFitResult garch_fit(std::span<const double> returns);

}  // namespace movest
