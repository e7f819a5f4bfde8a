#include "movest/aepd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "movest/estimate_static.hpp"
#include "movest/special_functions.hpp"

namespace movest {

namespace {

// ln C(kappa) for the one-sided halves: C(kappa) = kappa^{-1/kappa} / Gamma(1 + 1/kappa).
double log_side_const(double kappa) {
    return -std::log(kappa) / kappa - sf::ln_gamma(1.0 + 1.0 / kappa);
}

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("AepdParams: ") + name +
                                    " must be positive, got " + std::to_string(v));
    }
}

}  // namespace

AepdParams::AepdParams(double kappa_l_in, double kappa_r_in, double sigma_l_in,
                       double sigma_r_in, double mu_in, double alpha_in)
    : kappa_l(kappa_l_in),
      kappa_r(kappa_r_in),
      sigma_l(sigma_l_in),
      sigma_r(sigma_r_in),
      mu(mu_in),
      alpha(alpha_in) {
    check_positive(kappa_l, "kappa_l");
    check_positive(kappa_r, "kappa_r");
    check_positive(sigma_l, "sigma_l");
    check_positive(sigma_r, "sigma_r");
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("AepdParams: alpha must lie in (0,1), got " +
                                    std::to_string(alpha_in));
    }
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("AepdParams: mu must be finite");
    }
}

AepdParams AepdParams::continuous(double kappa_l, double kappa_r, double sigma_l,
                                  double sigma_r, double mu) {
    return AepdParams(kappa_l, kappa_r, sigma_l, sigma_r, mu,
                      continuity_alpha(kappa_l, kappa_r, sigma_l, sigma_r));
}

double continuity_alpha(double kappa_l, double kappa_r, double sigma_l,
                        double sigma_r) {
    const double log_ratio = log_side_const(kappa_l) - log_side_const(kappa_r) +
                             std::log(sigma_r) - std::log(sigma_l);
    return 1.0 / (std::exp(log_ratio) + 1.0);
}

double log_pdf(const AepdParams& p, double x) {
    if (x < p.mu) {
        const double z = (p.mu - x) / p.sigma_l;
        return std::log(p.alpha) + log_side_const(p.kappa_l) -
               std::log(p.sigma_l) - std::pow(z, p.kappa_l) / p.kappa_l;
    }
    const double z = (x - p.mu) / p.sigma_r;
    const double zk = z > 0.0 ? std::pow(z, p.kappa_r) : 0.0;
    return std::log1p(-p.alpha) + log_side_const(p.kappa_r) -
           std::log(p.sigma_r) - zk / p.kappa_r;
}

double pdf(const AepdParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const AepdParams& p, double x) {
    if (x < p.mu) {
        const double z = (p.mu - x) / p.sigma_l;
        const double u = std::pow(z, p.kappa_l) / p.kappa_l;
        return p.alpha * sf::reg_upper_gamma(1.0 / p.kappa_l, u);
    }
    const double z = (x - p.mu) / p.sigma_r;
    if (z == 0.0) return p.alpha;
    const double u = std::pow(z, p.kappa_r) / p.kappa_r;
    return p.alpha + (1.0 - p.alpha) * sf::reg_lower_gamma(1.0 / p.kappa_r, u);
}

AepdAdaptiveState init_aepd_state(const AepdParams& params, AlphaMode mode) {
    return {params, mode, 1};
}

AepdAdaptiveState aepd_adapt_step(const AepdAdaptiveState& state, double x,
                                  const RateConfig& rates) {
    rates.validate();
    const AepdParams& p = state.params;
    const bool left = x < p.mu;  // side decided against the pre-update mu

    double sigma_l = p.sigma_l;
    double sigma_r = p.sigma_r;
    if (left) {
        const double bk = rates.eta * std::pow(p.sigma_l, p.kappa_l) +
                          (1.0 - rates.eta) * std::pow(p.mu - x, p.kappa_l);
        sigma_l = std::pow(bk, 1.0 / p.kappa_l);
    } else {
        const double bk = rates.eta * std::pow(p.sigma_r, p.kappa_r) +
                          (1.0 - rates.eta) * std::pow(x - p.mu, p.kappa_r);
        sigma_r = std::pow(bk, 1.0 / p.kappa_r);
    }

    const double mu = rates.mu_weight_on_new
                          ? (1.0 - rates.nu) * p.mu + rates.nu * x
                          : rates.nu * p.mu + (1.0 - rates.nu) * x;

    double alpha;
    if (state.alpha_mode == AlphaMode::continuity) {
        alpha = continuity_alpha(p.kappa_l, p.kappa_r, sigma_l, sigma_r);
    } else {
        alpha = rates.xi * p.alpha + (1.0 - rates.xi) * (left ? 1.0 : 0.0);
    }

    return {AepdParams(p.kappa_l, p.kappa_r, sigma_l, sigma_r, mu, alpha),
            state.alpha_mode, state.t + 1};
}

AepdAdaptiveState aepd_gradient_step(const AepdAdaptiveState& state, double x,
                                     const AepdEpsilons& eps) {
    const AepdParams& p = state.params;
    const bool left = x < p.mu;
    const double kappa = left ? p.kappa_l : p.kappa_r;
    const double sigma = left ? p.sigma_l : p.sigma_r;
    const double z = (left ? p.mu - x : x - p.mu) / sigma;

    // per-branch partials; same form as the symmetric density
    const double zk = z > 0.0 ? std::pow(z, kappa) : 0.0;
    const double dsigma = (zk - 1.0) / sigma;
    double dkappa = 0.0;
    if (z > 0.0 || kappa > 1.0) {
        const double tail = z > 0.0 ? zk * (1.0 - kappa * std::log(z)) : 0.0;
        dkappa = (std::log(kappa) - 1.0 + sf::digamma(1.0 + 1.0 / kappa) + tail) /
                 (kappa * kappa);
    }

    const KappaRange kr{};
    double kappa_l = p.kappa_l;
    double kappa_r = p.kappa_r;
    double sigma_l = p.sigma_l;
    double sigma_r = p.sigma_r;
    if (left) {
        sigma_l = std::max(1e-12, sigma_l + eps.sigma_l * dsigma);
        kappa_l = std::clamp(kappa_l + eps.kappa_l * dkappa, kr.lo, kr.hi);
    } else {
        sigma_r = std::max(1e-12, sigma_r + eps.sigma_r * dsigma);
        kappa_r = std::clamp(kappa_r + eps.kappa_r * dkappa, kr.lo, kr.hi);
    }

    double alpha = p.alpha;
    if (state.alpha_mode == AlphaMode::continuity) {
        alpha = continuity_alpha(kappa_l, kappa_r, sigma_l, sigma_r);
    }
    return {AepdParams(kappa_l, kappa_r, sigma_l, sigma_r, p.mu, alpha),
            state.alpha_mode, state.t};
}

}  // namespace movest
