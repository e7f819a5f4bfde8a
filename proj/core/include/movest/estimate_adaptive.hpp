#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "movest/estimate_static.hpp"
#include "movest/rates.hpp"

namespace movest {

/// State of the moving estimator for one stream.
///
/// `b` always holds the effective sigma^kappa used for the NEXT observation
/// (strict one-step-ahead causality). With `rates.debias` the recursion keeps
/// b equal to the exactly normalized weighted sum; without it b is the plain
/// EMA started from sigma_1^kappa.
struct AdaptiveState {
    double kappa;
    double b;        // current sigma^kappa
    double mu_hat;   // current location estimate
    double x2_hat;   // EMA of x^2 for moment-based shape estimation
    double eta;      // current scale retention (evolves under gradient updates)
    std::int64_t t;  // 1-based step index; t observations - 1 consumed so far
    RateConfig rates;

    double sigma() const;
};

AdaptiveState init_state(double sigma_1, double mu_1, double kappa,
                         const RateConfig& rates);

struct AdaptiveStepResult {
    AdaptiveState state;
    double log_density;  // of x under the pre-update parameters
};

/// Consume one observation: emit its log-density under the parameters held
/// before the update, then advance b, mu_hat, x2_hat.
AdaptiveStepResult adaptive_step(const AdaptiveState& state, double x);

/// Reinterpret the state under a new shape, preserving the current sigma.
AdaptiveState with_kappa(const AdaptiveState& state, double kappa);

/// The O(T) normalized-weight oracle
/// sigma_T = (sum_{t<T} eta^{T-t}/c_T |x_t - mu|^kappa)^{1/kappa},
/// c_T = (eta - eta^T)/(1 - eta). T is 1-based; requires 2 <= T <= n + 1.
double exact_moving_mle(std::span<const double> history, std::size_t T,
                        double kappa, double mu, double eta);

/// Generic f(EMA of g) moving estimator: emits f(b_T) before consuming x_T,
/// then b <- eta * b + (1 - eta) * g(x_T). Output has one entry per input.
std::vector<double> generic_moving_estimator(
    const std::function<double(double)>& g_transform,
    const std::function<double(double)>& f_transform,
    std::span<const double> stream, double eta, double b_1);

/// One-step gradient of the emitted log-likelihood with respect to the
/// update speed 1 - eta, for f(b) = b^{1/kappa}, g(x) = |x - mu|^kappa:
/// G_T = (g(x_prev) - b_prev) f'(b_prev) (d/dsigma log_pdf)(f(b_prev), x).
/// Callers apply eta <- clamp(eta - epsilon * G_T, kEtaClampLo, kEtaClampHi).
double eta_gradient(double b_prev, double x_prev, double x, double kappa,
                    double mu);

struct RateEstimate {
    double eta_bar;   // estimated update speed 1 - eta
    bool degenerate;  // numerator variance was exactly zero
};

/// Estimate the update speed of an observed trajectory as
/// sqrt(Var(b_{T+1} - b_T)) / sqrt(Var(g(x_T) - b_T)).
/// Throws undefined_rate_error when the denominator variance vanishes while
/// the numerator does not.
RateEstimate rate_from_variance_ratio(std::span<const double> b_trajectory,
                                      std::span<const double> g_values);

struct KappaEstimate {
    double kappa;
    bool updated;
};

/// Moment-based shape step: solve the EPD variance relation for kappa using
/// variance_T = x2_hat - mu_hat^2 and the current sigma. Returns the previous
/// kappa (updated = false) before burn-in or when the ratio is infeasible.
KappaEstimate kappa_moment_step(const AdaptiveState& state,
                                KappaRange range = {},
                                std::int64_t burn_in = 100);

/// Gradient shape step: one log-likelihood ascent step on kappa, clamped to
/// the range. A singular gradient (x at mu with kappa <= 1) contributes 0.
double kappa_gradient_step(const AdaptiveState& state, double x,
                           double epsilon, KappaRange range = {});

}  // namespace movest
