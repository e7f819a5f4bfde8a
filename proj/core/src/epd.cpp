#include "movest/epd.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "movest/special_functions.hpp"

namespace movest {

EpdParams::EpdParams(double kappa_in, double mu_in, double sigma_in)
    : kappa(kappa_in), mu(mu_in), sigma(sigma_in) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw std::invalid_argument("EpdParams: kappa must be positive, got " +
                                    std::to_string(kappa_in));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("EpdParams: sigma must be positive, got " +
                                    std::to_string(sigma_in));
    }
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("EpdParams: mu must be finite");
    }
}

double log_norm_const(double kappa) {
    return -std::log(kappa) / kappa - std::log(2.0) -
           sf::ln_gamma(1.0 + 1.0 / kappa);
}

double log_pdf(const EpdParams& p, double x) {
    const double z = std::abs(x - p.mu) / p.sigma;
    const double zk = z > 0.0 ? std::pow(z, p.kappa) : 0.0;
    return log_norm_const(p.kappa) - std::log(p.sigma) - zk / p.kappa;
}

double pdf(const EpdParams& p, double x) { return std::exp(log_pdf(p, x)); }

double cdf(const EpdParams& p, double x) {
    const double z = std::abs(x - p.mu) / p.sigma;
    if (z == 0.0) return 0.5;
    const double a = 1.0 / p.kappa;
    const double u = std::pow(z, p.kappa) / p.kappa;
    // the left branch goes through the upper function so tiny tail masses
    // survive in full relative precision
    if (x < p.mu) return 0.5 * sf::reg_upper_gamma(a, u);
    return 0.5 * (1.0 + sf::reg_lower_gamma(a, u));
}

double quantile(const EpdParams& p, double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("quantile: q must lie in (0,1), got " +
                                std::to_string(q));
    }
    if (q == 0.5) return p.mu;
    const double a = 1.0 / p.kappa;
    // tail_mass = Q(a, u) at the target point; inverting the upper function
    // directly keeps relative accuracy deep in the tails
    const double tail_mass = q > 0.5 ? 2.0 * (1.0 - q) : 2.0 * q;
    const double u = tail_mass < 0.5
                         ? sf::inv_reg_upper_gamma(a, tail_mass)
                         : sf::inv_reg_lower_gamma(a, 1.0 - tail_mass);
    const double z = std::pow(p.kappa * u, 1.0 / p.kappa);
    return q > 0.5 ? p.mu + p.sigma * z : p.mu - p.sigma * z;
}

std::vector<double> sample(const EpdParams& p, std::size_t n,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::gamma_distribution<double> gamma(1.0 / p.kappa, 1.0);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double g = gamma(rng);
        const double mag = std::pow(p.kappa * g, 1.0 / p.kappa);
        const double s = sign(rng) == 0 ? -1.0 : 1.0;
        out.push_back(p.mu + s * p.sigma * mag);
    }
    return out;
}

double variance_of(const EpdParams& p) {
    const double k = p.kappa;
    return p.sigma * p.sigma *
           std::exp(2.0 / k * std::log(k) + sf::ln_gamma(3.0 / k) -
                    sf::ln_gamma(1.0 / k));
}

EpdGrad log_pdf_grad(const EpdParams& p, double x) {
    const double k = p.kappa;
    const double r = x - p.mu;
    const double z = std::abs(r) / p.sigma;

    if (z == 0.0) {
        // smooth point only for kappa > 1
        const double dkappa =
            (std::log(k) - 1.0 + sf::digamma(1.0 + 1.0 / k)) / (k * k);
        if (k <= 1.0) {
            return {0.0, 0.0, -1.0 / p.sigma, true};
        }
        return {dkappa, 0.0, -1.0 / p.sigma, false};
    }

    const double zk = std::pow(z, k);
    const double dmu = (r > 0.0 ? 1.0 : -1.0) * std::pow(z, k - 1.0) / p.sigma;
    const double dsigma = (zk - 1.0) / p.sigma;
    const double dkappa = (std::log(k) - 1.0 + sf::digamma(1.0 + 1.0 / k) +
                           zk * (1.0 - k * std::log(z))) /
                          (k * k);
    return {dkappa, dmu, dsigma, false};
}

}  // namespace movest
