#include "movest/estimate_adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "movest/epd.hpp"
#include "movest/errors.hpp"

namespace movest {

void RateConfig::validate() const {
    if (!(eta > 0.0) || eta > 1.0) {
        throw std::invalid_argument("RateConfig: eta must lie in (0,1]");
    }
    if (!(nu > 0.0) || nu > 1.0) {
        throw std::invalid_argument("RateConfig: nu must lie in (0,1]");
    }
    if (!(xi > 0.0) || !(xi < 1.0)) {
        throw std::invalid_argument("RateConfig: xi must lie in (0,1)");
    }
    if (epsilon_eta < 0.0 || epsilon_kappa < 0.0) {
        throw std::invalid_argument("RateConfig: learning rates must be nonnegative");
    }
}

double AdaptiveState::sigma() const { return std::pow(b, 1.0 / kappa); }

AdaptiveState init_state(double sigma_1, double mu_1, double kappa,
                         const RateConfig& rates) {
    rates.validate();
    if (!(sigma_1 > 0.0)) {
        throw std::invalid_argument("init_state: sigma_1 must be positive");
    }
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("init_state: kappa must be positive");
    }
    AdaptiveState st;
    st.kappa = kappa;
    st.b = std::pow(sigma_1, kappa);
    st.mu_hat = mu_1;
    st.x2_hat = sigma_1 * sigma_1;
    st.eta = rates.eta;
    st.t = 1;
    st.rates = rates;
    return st;
}

AdaptiveStepResult adaptive_step(const AdaptiveState& state, double x) {
    const double log_density =
        log_pdf(EpdParams(state.kappa, state.mu_hat, state.sigma()), x);

    const double r = std::abs(x - state.mu_hat);  // pre-update location
    const double g = r > 0.0 ? std::pow(r, state.kappa) : 0.0;
    const double eta = state.eta;

    AdaptiveState next = state;
    if (state.rates.debias) {
        // keep b equal to the exactly normalized weighted sum at every step
        if (eta == 1.0) {
            next.b = state.b + (g - state.b) / double(state.t);
        } else if (state.t == 1) {
            next.b = g;
        } else {
            const double prev_norm = 1.0 - std::pow(eta, double(state.t - 1));
            const double norm = 1.0 - std::pow(eta, double(state.t));
            next.b = (eta * state.b * prev_norm + (1.0 - eta) * g) / norm;
        }
    } else {
        next.b = eta * state.b + (1.0 - eta) * g;
    }

    const double nu = state.rates.nu;
    if (state.rates.mu_weight_on_new) {
        next.mu_hat = (1.0 - nu) * state.mu_hat + nu * x;
        next.x2_hat = (1.0 - nu) * state.x2_hat + nu * x * x;
    } else {
        next.mu_hat = nu * state.mu_hat + (1.0 - nu) * x;
        next.x2_hat = nu * state.x2_hat + (1.0 - nu) * x * x;
    }
    next.t = state.t + 1;
    return {next, log_density};
}

AdaptiveState with_kappa(const AdaptiveState& state, double kappa) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("with_kappa: kappa must be positive");
    }
    AdaptiveState next = state;
    next.b = std::pow(state.sigma(), kappa);
    next.kappa = kappa;
    return next;
}

double exact_moving_mle(std::span<const double> history, std::size_t T,
                        double kappa, double mu, double eta) {
    if (T < 2) {
        throw insufficient_history_error(
            "exact_moving_mle: needs at least one past observation (T >= 2)");
    }
    if (T > history.size() + 1) {
        throw std::invalid_argument("exact_moving_mle: T exceeds history length + 1");
    }
    if (!(eta > 0.0) || !(eta < 1.0)) {
        throw std::invalid_argument("exact_moving_mle: eta must lie in (0,1)");
    }
    const double c_T = (eta - std::pow(eta, double(T))) / (1.0 - eta);
    double acc = 0.0;
    for (std::size_t t = 1; t < T; ++t) {
        const double w = std::pow(eta, double(T - t)) / c_T;
        const double r = std::abs(history[t - 1] - mu);
        if (r > 0.0) acc += w * std::pow(r, kappa);
    }
    return std::pow(acc, 1.0 / kappa);
}

std::vector<double> generic_moving_estimator(
    const std::function<double(double)>& g_transform,
    const std::function<double(double)>& f_transform,
    std::span<const double> stream, double eta, double b_1) {
    if (!(eta > 0.0) || eta > 1.0) {
        throw std::invalid_argument("generic_moving_estimator: eta must lie in (0,1]");
    }
    std::vector<double> out;
    out.reserve(stream.size());
    double b = b_1;
    for (double x : stream) {
        out.push_back(f_transform(b));
        b = eta * b + (1.0 - eta) * g_transform(x);
    }
    return out;
}

double eta_gradient(double b_prev, double x_prev, double x, double kappa,
                    double mu) {
    if (!(b_prev > 0.0)) {
        throw std::invalid_argument("eta_gradient: b_prev must be positive");
    }
    const double r = std::abs(x_prev - mu);
    const double g = r > 0.0 ? std::pow(r, kappa) : 0.0;
    const double sigma = std::pow(b_prev, 1.0 / kappa);
    const double fprime = sigma / (kappa * b_prev);  // d/db b^{1/kappa}
    const double dsigma = log_pdf_grad(EpdParams(kappa, mu, sigma), x).dsigma;
    return (g - b_prev) * fprime * dsigma;
}

RateEstimate rate_from_variance_ratio(std::span<const double> b_trajectory,
                                      std::span<const double> g_values) {
    const std::size_t steps =
        std::min(b_trajectory.size() > 0 ? b_trajectory.size() - 1 : 0,
                 g_values.size());
    if (steps < 2) {
        throw insufficient_history_error(
            "rate_from_variance_ratio: needs at least two update steps");
    }

    // Welford accumulators for the step sizes and the residuals
    double mean_d = 0.0, m2_d = 0.0, mean_r = 0.0, m2_r = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const double d = b_trajectory[i + 1] - b_trajectory[i];
        const double r = g_values[i] - b_trajectory[i];
        const double n = double(i + 1);
        const double dd = d - mean_d;
        mean_d += dd / n;
        m2_d += dd * (d - mean_d);
        const double dr = r - mean_r;
        mean_r += dr / n;
        m2_r += dr * (r - mean_r);
    }
    const double var_d = m2_d / double(steps - 1);
    const double var_r = m2_r / double(steps - 1);

    if (var_d == 0.0) return {0.0, true};
    if (!(var_r > 0.0)) {
        throw undefined_rate_error(
            "rate_from_variance_ratio: residual variance is zero");
    }
    return {std::sqrt(var_d / var_r), false};
}

KappaEstimate kappa_moment_step(const AdaptiveState& state, KappaRange range,
                                std::int64_t burn_in) {
    if (state.t <= burn_in) return {state.kappa, false};
    const double variance = state.x2_hat - state.mu_hat * state.mu_hat;
    if (!(variance > 0.0)) return {state.kappa, false};
    try {
        return {kappa_from_moments(variance, state.sigma(), range), true};
    } catch (const no_solution_error&) {
        return {state.kappa, false};
    }
}

double kappa_gradient_step(const AdaptiveState& state, double x, double epsilon,
                           KappaRange range) {
    if (epsilon == 0.0) return state.kappa;
    const EpdGrad grad =
        log_pdf_grad(EpdParams(state.kappa, state.mu_hat, state.sigma()), x);
    const double dk = grad.singular ? 0.0 : grad.dkappa;
    return std::clamp(state.kappa + epsilon * dk, range.lo, range.hi);
}

}  // namespace movest
