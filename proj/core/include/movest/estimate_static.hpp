#pragma once

#include <span>
#include <vector>

#include "movest/epd.hpp"

namespace movest {

/// Observations with nonnegative weights normalized to sum to one.
class WeightedSample {
public:
    WeightedSample(std::vector<double> values, std::vector<double> weights);

    /// Equal weights 1/n.
    static WeightedSample equal(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
    std::vector<double> weights_;
};

struct KappaRange {
    double lo = 0.3;
    double hi = 4.0;
};

/// Closed-form scale MLE at fixed kappa, mu:
/// sigma = (sum_i w_i |x_i - mu|^kappa)^{1/kappa}.
/// Throws degenerate_sample_error when every |x_i - mu| is zero.
double sigma_mle(const WeightedSample& s, double kappa, double mu);

/// Weighted kappa-power deviation objective sum_i w_i |x_i - mu|^kappa.
double mu_objective(const WeightedSample& s, double kappa, double mu);

/// argmin_mu of mu_objective. Weighted mean at kappa = 2, weighted median at
/// kappa = 1, golden-section for other kappa >= 1 (convex objective); for
/// kappa < 1 the minimum sits at a data point and is found by scanning.
double mu_estimate(const WeightedSample& s, double kappa);

struct StaticFit {
    EpdParams params;
    double mean_loglik;
};

/// Profile fit at fixed kappa: mu via mu_estimate, sigma via sigma_mle,
/// mean log-likelihood from the closed form at the optimum.
StaticFit fit_fixed_kappa(const WeightedSample& s, double kappa);

/// Full MLE: 1-D profile search over kappa (coarse grid pre-scan plus
/// golden-section on log kappa) to kappa tolerance 1e-4.
StaticFit fit_full(const WeightedSample& s, KappaRange range = {});

/// Shape from the method of moments: the kappa with
/// variance_of(kappa, sigma) = variance, by bracketed root-finding on the
/// strictly decreasing variance ratio. Throws no_solution_error when the
/// ratio is outside the achievable range.
double kappa_from_moments(double variance, double sigma, KappaRange range = {});

}  // namespace movest
