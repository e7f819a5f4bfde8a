#include "movest/garch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "movest/optimize.hpp"

namespace movest {

namespace {
constexpr double kLogTwoPi = 1.8378770664093455;
}

GarchParams::GarchParams(double omega_in, double alpha_in, double beta_in,
                         double mu_in)
    : omega(omega_in), alpha(alpha_in), beta(beta_in), mu(mu_in) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("GarchParams: omega must be positive, got " +
                                    std::to_string(omega_in));
    }
    if (alpha < 0.0 || beta < 0.0) {
        throw std::invalid_argument("GarchParams: alpha and beta must be nonnegative");
    }
    if (!(alpha + beta < 1.0)) {
        throw std::invalid_argument(
            "GarchParams: alpha + beta must stay below 1 for stationarity");
    }
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("GarchParams: mu must be finite");
    }
}

GarchFilterResult garch_filter(const GarchParams& p,
                               std::span<const double> returns,
                               double sigma2_init) {
    if (returns.empty()) {
        throw std::invalid_argument("garch_filter: empty return series");
    }
    if (!(sigma2_init > 0.0)) {
        throw std::invalid_argument("garch_filter: sigma2_init must be positive");
    }
    GarchFilterResult out;
    out.variance.reserve(returns.size());
    out.log_density.reserve(returns.size());
    double sigma2 = sigma2_init;
    double total = 0.0;
    for (std::size_t t = 0; t < returns.size(); ++t) {
        if (t > 0) {
            const double e = returns[t - 1] - p.mu;
            sigma2 = p.omega + p.alpha * e * e + p.beta * sigma2;
        }
        const double e = returns[t] - p.mu;
        const double ll = -0.5 * (kLogTwoPi + std::log(sigma2) + e * e / sigma2);
        out.variance.push_back(sigma2);
        out.log_density.push_back(ll);
        total += ll;
    }
    out.mean_loglik = total / double(returns.size());
    return out;
}

namespace {

double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

struct Transformed {
    // u0: logit of persistence alpha+beta, u1: logit of alpha's share,
    // u2: log omega
    static GarchParams to_params(std::span<const double> u, double mu) {
        const double persistence = sigmoid(u[0]) * (1.0 - 1e-9);
        const double share = sigmoid(u[1]);
        const double omega = std::exp(u[2]);
        return GarchParams(omega, persistence * share,
                           persistence * (1.0 - share), mu);
    }
};

}  // namespace

GarchFitResult garch_fit(std::span<const double> returns) {
    if (returns.size() < 100) {
        throw std::invalid_argument(
            "garch_fit: needs at least 100 observations, got " +
            std::to_string(returns.size()));
    }
    double mean = 0.0;
    for (double x : returns) mean += x;
    mean /= double(returns.size());
    double var = 0.0;
    for (double x : returns) var += (x - mean) * (x - mean);
    var /= double(returns.size() - 1);
    if (!(var > 0.0)) {
        throw std::invalid_argument("garch_fit: zero-variance series");
    }

    auto objective = [&](std::span<const double> u) {
        const GarchParams p = Transformed::to_params(u, mean);
        return -garch_filter(p, returns, var).mean_loglik;
    };

    // deterministic multi-starts: (persistence, alpha share), omega matching
    // the sample variance via omega = var * (1 - persistence)
    const double starts[5][2] = {
        {0.90, 0.10}, {0.98, 0.08 / 0.98}, {0.50, 0.50}, {0.99, 0.05}, {0.80, 0.25}};

    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_u;
    bool any_converged = false;
    for (const auto& s : starts) {
        const std::vector<double> u0 = {logit(s[0]), logit(s[1]),
                                        std::log(var * (1.0 - s[0]))};
        const auto res = nelder_mead(objective, u0, 0.5, 600, 1e-12);
        any_converged = any_converged || res.converged;
        if (res.fmin < best_f) {
            best_f = res.fmin;
            best_u = res.x;
        }
    }

    return {Transformed::to_params(best_u, mean), -best_f, any_converged};
}

}  // namespace movest
