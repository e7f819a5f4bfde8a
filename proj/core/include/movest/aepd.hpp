#pragma once

#include <cstdint>

#include "movest/rates.hpp"

namespace movest {

/// Asymmetric EPD: two one-sided EPD halves glued at mu, with left mass
/// alpha. Reduces to the symmetric EPD for equal sides and alpha = 1/2.
struct AepdParams {
    double kappa_l;
    double kappa_r;
    double sigma_l;
    double sigma_r;
    double mu;
    double alpha;  // probability of x < mu, in (0, 1)

    AepdParams(double kappa_l, double kappa_r, double sigma_l, double sigma_r,
               double mu, double alpha);

    /// Same sides but alpha chosen by the continuity condition.
    static AepdParams continuous(double kappa_l, double kappa_r, double sigma_l,
                                 double sigma_r, double mu);
};

/// alpha = (C(kappa_l) sigma_r / (C(kappa_r) sigma_l) + 1)^{-1}, the unique
/// left mass making the glued density continuous at mu.
double continuity_alpha(double kappa_l, double kappa_r, double sigma_l,
                        double sigma_r);

double pdf(const AepdParams& p, double x);
double log_pdf(const AepdParams& p, double x);

/// CDF; cdf(mu) = alpha exactly.
double cdf(const AepdParams& p, double x);

/// How alpha evolves under adaptive stepping.
enum class AlphaMode {
    continuity,  // re-derive alpha from the continuity condition each step
    frequency,   // alpha <- xi * alpha + (1 - xi) * [x < mu]
};

struct AepdAdaptiveState {
    AepdParams params;
    AlphaMode alpha_mode;
    std::int64_t t;
};

AepdAdaptiveState init_aepd_state(const AepdParams& params,
                                  AlphaMode mode = AlphaMode::continuity);

/// One observation: location EMA on mu, one-sided scale EMA on the side of x
/// relative to the pre-update mu (x >= mu updates the right side), then the
/// alpha update per mode. Pure; returns the new state.
AepdAdaptiveState aepd_adapt_step(const AepdAdaptiveState& state, double x,
                                  const RateConfig& rates);

/// Per-parameter learning rates for the optional gradient update.
struct AepdEpsilons {
    double sigma_l = 0.0;
    double sigma_r = 0.0;
    double kappa_l = 0.0;
    double kappa_r = 0.0;
};

/// One log-likelihood ascent step on the scale/shape of the side x falls on,
/// using the analytic per-branch gradients. In continuity mode alpha is
/// re-derived afterwards.
AepdAdaptiveState aepd_gradient_step(const AepdAdaptiveState& state, double x,
                                     const AepdEpsilons& eps);

}  // namespace movest
