// Acceptance suite: runs each release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Criteria 8-10 need a DJIA daily
// close series (not shipped); point MOVEST_DJIA_CSV at the file to enable
// them (MOVEST_DJIA_COLUMN optionally names the price column).
//
// Exit status is nonzero when any executed criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "movest/data_io.hpp"
#include "movest/epd.hpp"
#include "movest/errors.hpp"
#include "movest/estimate_adaptive.hpp"
#include "movest/estimate_static.hpp"
#include "movest/eval.hpp"
#include "movest/garch.hpp"
#include "movest/special_functions.hpp"
#include "support/oracles.hpp"

using namespace movest;

namespace {

struct CheckFailure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CheckFailure{message};
}

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    double normal() { return std::normal_distribution<double>()(rng_); }

private:
    std::mt19937_64 rng_;
};

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// ---------- criterion 1: special-function identities ----------

std::string criterion_special_functions() {
    Rng rng(1001);
    for (int i = 0; i < 400; ++i) {
        const double a = rng.uniform(0.1, 50.0);
        const double lhs = std::exp(sf::ln_gamma(a + 1.0));
        const double rhs = a * std::exp(sf::ln_gamma(a));
        require(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs),
                "gamma recurrence broke at a=" + num(a));
    }
    for (int i = 0; i < 400; ++i) {
        const double a = rng.uniform(0.1, 20.0);
        const double p = rng.uniform(1e-6, 1.0 - 1e-6);
        const double z = sf::inv_reg_lower_gamma(a, p);
        require(std::abs(sf::reg_lower_gamma(a, z) - p) <= 1e-8,
                "P/P^-1 round trip broke at a=" + num(a) + ", p=" + num(p));
    }
    for (int i = 0; i < 400; ++i) {
        const double a = rng.uniform(0.1, 50.0);
        const double fd =
            central_diff([](double x) { return sf::ln_gamma(x); }, a, 1e-6);
        require(std::abs(sf::digamma(a) - fd) <= 1e-4,
                "digamma mismatch at a=" + num(a));
    }
    return "gamma recurrence, inverse round-trip, digamma: 1200 random draws";
}

// ---------- criterion 2: EPD correctness ----------

std::string criterion_epd() {
    // density normalization by adaptive quadrature, split at the mode so the
    // kappa < 1 cusp sits on a panel boundary; tail widths keep the truncated
    // mass far below the tolerance
    for (double kappa : {0.5, 1.0, 2.0, 3.0}) {
        const EpdParams p(kappa, 0.0, 1.0);
        const double w = std::pow(35.0 * kappa, 1.0 / kappa) + 10.0;
        auto density = [&](double x) { return pdf(p, x); };
        const double total = oracles::integrate(density, -w, 0.0, 5e-10) +
                             oracles::integrate(density, 0.0, w, 5e-10);
        require(std::abs(total - 1.0) <= 1e-6,
                "pdf mass " + num(total) + " at kappa=" + num(kappa));

        for (int i = -20; i <= 20; ++i) {
            const double x = 5.0 * double(i) / 20.0;
            const double q = cdf(p, x);
            // points where q sits within ~1e-9 of 1 no longer carry the tail
            // in a double, so the x-space identity is vacuous there
            if (q <= 0.0 || q >= 1.0 || std::min(q, 1.0 - q) < 1e-9) continue;
            require(std::abs(quantile(p, q) - x) <= 1e-7 * std::max(1.0, std::abs(x)),
                    "quantile/cdf mismatch at kappa=" + num(kappa) + ", x=" + num(x));
        }
    }

    // sampler Kolmogorov-Smirnov at the 1% level
    const std::size_t n = 100000;
    const double threshold = 1.63 / std::sqrt(double(n));
    std::uint64_t seed = 2001;
    for (double kappa : {0.5, 1.0, 2.0, 3.0}) {
        const EpdParams p(kappa, 0.0, 1.0);
        const auto draws = sample(p, n, seed++);
        std::vector<double> y;
        y.reserve(n);
        for (double x : draws) y.push_back(cdf(p, x));
        const double d = ks_statistic(y);
        require(d < threshold, "KS " + num(d) + " >= " + num(threshold) +
                                   " at kappa=" + num(kappa));
    }

    // sample variance against the closed form, three standard errors
    struct MomentCase { double kappa, m2, m4; };
    const MomentCase cases[] = {{0.5, 7.5, 1417.5},
                                {1.0, 2.0, 24.0},
                                {2.0, 1.0, 3.0},
                                {3.0, 0.7764582113784204, 1.458022265894454}};
    for (const auto& c : cases) {
        const std::size_t m = 1000000;
        const auto draws = sample(EpdParams(c.kappa, 0.0, 1.0), m, seed++);
        double var = 0.0;
        for (double x : draws) var += x * x;
        var /= double(m);
        const double se = std::sqrt((c.m4 - c.m2 * c.m2) / double(m));
        require(std::abs(var - c.m2) <= 3.0 * se,
                "variance " + num(var) + " vs " + num(c.m2) +
                    " at kappa=" + num(c.kappa));
    }
    return "normalization, quantile round-trip, sampler KS (1%), variance vs closed form";
}

// ---------- criterion 3: estimator-oracle equivalence ----------

std::string criterion_estimator_oracle() {
    Rng rng(3001);

    // closed-form scale MLE vs direct likelihood maximization
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + std::size_t(rng.uniform(0.0, 30.0));
        std::vector<double> values, weights;
        for (std::size_t i = 0; i < n; ++i) {
            values.push_back(rng.normal() * 2.0);
            weights.push_back(rng.uniform(0.05, 1.0));
        }
        const WeightedSample s(values, weights);
        const double kappa = rng.uniform(0.5, 3.0);
        const double mu = rng.uniform(-0.5, 0.5);
        const double closed = sigma_mle(s, kappa, mu);

        auto loglik = [&](double sigma) {
            double acc = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                acc += s.weights()[i] *
                       log_pdf(EpdParams(kappa, mu, sigma), s.values()[i]);
            }
            return acc;
        };
        // golden-section maximization over log sigma, independent of the formula
        double lo = std::log(closed) - 2.0, hi = std::log(closed) + 2.0;
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 120; ++it) {
            const double c = hi - inv_phi * (hi - lo);
            const double d = lo + inv_phi * (hi - lo);
            if (loglik(std::exp(c)) > loglik(std::exp(d))) {
                hi = d;
            } else {
                lo = c;
            }
        }
        const double brute = std::exp(0.5 * (lo + hi));
        require(std::abs(closed - brute) <= 1e-6 * closed,
                "scale MLE " + num(closed) + " vs oracle " + num(brute));
    }

    // debiased recursion vs the normalized-weight sums
    for (int stream = 0; stream < 10; ++stream) {
        std::vector<double> xs;
        for (int i = 0; i < 500; ++i) xs.push_back(rng.normal());
        const double kappa = rng.uniform(0.6, 2.5);
        const double mu = rng.uniform(-0.2, 0.2);
        const double eta = rng.uniform(0.85, 0.99);

        RateConfig rates;
        rates.eta = eta;
        rates.nu = 1.0;
        rates.debias = true;
        auto st = init_state(0.5, mu, kappa, rates);
        for (std::size_t T = 1; T <= xs.size(); ++T) {
            st = adaptive_step(st, xs[T - 1]).state;
            const double oracle = exact_moving_mle(xs, T + 1, kappa, mu, eta);
            require(std::abs(st.b - std::pow(oracle, kappa)) <=
                        1e-12 * std::max(1.0, st.b),
                    "debiased recursion diverged from the weight sums at T=" +
                        std::to_string(T));
        }
    }
    return "scale MLE vs brute force (100 samples), EMA debias identity (10 streams x 500)";
}

// ---------- criterion 4: gradient checks ----------

std::string criterion_gradients() {
    Rng rng(4001);
    int checked = 0;
    while (checked < 1000) {
        const double kappa = rng.uniform(0.5, 3.0);
        const double mu = rng.uniform(-1.0, 1.0);
        const double sigma = rng.uniform(0.5, 2.0);
        const double side = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const double x = mu + side * rng.uniform(0.2, 3.0) * sigma;

        const auto g = log_pdf_grad(EpdParams(kappa, mu, sigma), x);
        const double fd_k = central_diff(
            [&](double k) { return log_pdf(EpdParams(k, mu, sigma), x); }, kappa, 1e-6);
        const double fd_m = central_diff(
            [&](double m) { return log_pdf(EpdParams(kappa, m, sigma), x); }, mu, 1e-6);
        const double fd_s = central_diff(
            [&](double s) { return log_pdf(EpdParams(kappa, mu, s), x); }, sigma, 1e-6);
        require(std::abs(g.dkappa - fd_k) <= 1e-4 * std::max(1.0, std::abs(g.dkappa)),
                "dkappa mismatch");
        require(std::abs(g.dmu - fd_m) <= 1e-4 * std::max(1.0, std::abs(g.dmu)),
                "dmu mismatch");
        require(std::abs(g.dsigma - fd_s) <= 1e-4 * std::max(1.0, std::abs(g.dsigma)),
                "dsigma mismatch");

        // eta-gradient against the finite difference in the update speed
        const double b = rng.uniform(0.2, 2.0);
        const double x_prev = mu + side * rng.uniform(0.2, 2.0);
        const double gval = std::pow(std::abs(x_prev - mu), kappa);
        const double analytic = eta_gradient(b, x_prev, x, kappa, mu);
        const double fd_eta = central_diff(
            [&](double speed) {
                const double bT = b + speed * (gval - b);
                return log_pdf(EpdParams(kappa, mu, std::pow(bT, 1.0 / kappa)), x);
            },
            0.0, 1e-7);
        require(std::abs(analytic - fd_eta) <= 1e-4 * std::max(1.0, std::abs(analytic)),
                "eta gradient mismatch");
        ++checked;
    }
    return "log-pdf partials and G_T vs finite differences on 1000 configurations";
}

// ---------- criterion 5: adaptivity benefit ----------

std::string criterion_adaptivity_benefit() {
    std::vector<RegimeBlock> schedule;
    for (int i = 0; i < 10; ++i) {
        schedule.push_back({500, 0.01});
        schedule.push_back({500, 0.03});
    }
    const auto sim = gen_regime_switching(1.0, schedule, 5001);
    require(sim.returns.values.size() == 10000, "fixture size");

    RateConfig rates;
    rates.eta = 0.94;
    const auto adaptive = eval_adaptive(sim.returns, 1.0, rates, false, {0.01, 0.0});
    const double static_l =
        fit_fixed_kappa(WeightedSample::equal(sim.returns.values), 1.0).mean_loglik;
    const double gain = adaptive.mean_loglik - static_l;
    require(gain > 0.05, "adaptive gain " + num(gain) + " <= 0.05 nats");
    return "adaptive beats static by " + num(gain) + " nats on the regime fixture";
}

// ---------- criterion 6: recovery ----------

std::string criterion_recovery() {
    for (double kappa : {1.0, 2.0}) {
        const auto series =
            gen_epd_series(EpdParams(kappa, 0.0, 1.0), 100000, 6001 + int(kappa));
        const auto fit = fit_full(WeightedSample::equal(series.values));
        require(std::abs(fit.params.kappa - kappa) <= 0.1,
                "fit_full kappa " + num(fit.params.kappa) + " vs " + num(kappa));
    }

    const auto sim = gen_garch_series(GarchParams(1e-6, 0.08, 0.90, 0.0), 100000, 6003);
    const auto fit = garch_fit(sim.returns.values);
    const double persistence = fit.params.alpha + fit.params.beta;
    require(persistence >= 0.95 && persistence <= 0.995,
            "persistence " + num(persistence) + " outside [0.95, 0.995]");
    return "EPD shape within 0.1, GARCH persistence " + num(persistence);
}

// ---------- criterion 7: causality ----------

std::string criterion_causality() {
    const auto series = gen_epd_series(EpdParams(1.2, 0.0, 0.02), 500, 7001);
    const std::size_t T = 250;
    auto mutated = series.values;
    mutated[T] = 0.75;

    RateConfig rates;
    auto run = [&](const std::vector<double>& xs) {
        std::vector<double> out;
        auto st = init_state(0.01, 0.0, 1.2, rates);
        for (double x : xs) {
            auto r = adaptive_step(st, x);
            out.push_back(r.log_density);
            st = r.state;
        }
        return out;
    };
    const auto base = run(series.values);
    const auto changed = run(mutated);
    for (std::size_t t = 0; t < T; ++t) {
        require(base[t] == changed[t],
                "adaptive log-density changed at t=" + std::to_string(t));
    }

    const GarchParams p(1e-6, 0.08, 0.9, 0.0);
    const auto g0 = garch_filter(p, series.values, 1e-4);
    const auto g1 = garch_filter(p, mutated, 1e-4);
    for (std::size_t t = 0; t < T; ++t) {
        require(g0.log_density[t] == g1.log_density[t],
                "garch log-density changed at t=" + std::to_string(t));
    }
    return "mutating x_T leaves every earlier emitted term bit-identical";
}

// ---------- criteria 8-10: DJIA reproduction (conditional) ----------

std::optional<ReturnSeries> load_djia() {
    const char* path = std::getenv("MOVEST_DJIA_CSV");
    if (path == nullptr || std::string(path).empty()) return std::nullopt;

    std::vector<ColumnSelector> candidates;
    if (const char* col = std::getenv("MOVEST_DJIA_COLUMN")) {
        const std::string c(col);
        if (!c.empty() && std::all_of(c.begin(), c.end(), [](char ch) {
                return std::isdigit(static_cast<unsigned char>(ch));
            })) {
            candidates.emplace_back(std::size_t(std::stoul(c)));
        } else {
            candidates.emplace_back(c);
        }
    }
    candidates.emplace_back(std::string("close"));
    candidates.emplace_back(std::size_t(1));
    candidates.emplace_back(std::size_t(0));

    for (const auto& col : candidates) {
        try {
            const auto prices = load_price_csv(path, col);
            if (prices.values.size() > 1000) {
                return log_returns(prices, "djia");
            }
        } catch (const std::exception&) {
            continue;
        }
    }
    return std::nullopt;
}

std::string criterion_djia_static(const ReturnSeries& djia) {
    const auto gauss = eval_static(djia, 2.0);
    require(std::abs(gauss.mean_loglik - 3.04756) <= 0.005,
            "l(kappa=2) = " + num(gauss.mean_loglik));
    const auto laplace = eval_static(djia, 1.0);
    require(std::abs(laplace.mean_loglik - 3.23749) <= 0.005,
            "l(kappa=1) = " + num(laplace.mean_loglik));
    const auto full = eval_static_full(djia);
    require(std::abs(full.params.at("kappa") - 0.8912) <= 0.02,
            "full MLE kappa = " + num(full.params.at("kappa")));
    require(std::abs(full.mean_loglik - 3.2403) <= 0.005,
            "full MLE l = " + num(full.mean_loglik));
    return "l(2)=" + num(gauss.mean_loglik) + ", l(1)=" + num(laplace.mean_loglik) +
           ", kappa*=" + num(full.params.at("kappa")) + ", l*=" + num(full.mean_loglik);
}

std::string criterion_djia_adaptive(const ReturnSeries& djia) {
    RateConfig rates;
    rates.eta = 0.94;
    rates.nu = 0.997;

    const auto laplace = eval_adaptive(djia, 1.0, rates, false, {0.01, 0.0});
    require(std::abs(laplace.mean_loglik - 3.3187) <= 0.005,
            "adaptive l(kappa=1) = " + num(laplace.mean_loglik));

    std::vector<double> grid;
    for (int i = 0; i <= 16; ++i) grid.push_back(0.8 + 0.05 * i);
    const auto curve = sweep_kappa(djia, grid, SweepMode::adaptive_fixed_rate,
                                   rates, false, {0.01, 0.0});
    require(std::abs(curve.argmax_kappa - 1.147) <= 0.03,
            "adaptive argmax kappa = " + num(curve.argmax_kappa));
    require(std::abs(curve.max_loglik - 3.3222) <= 0.005,
            "adaptive optimum l = " + num(curve.max_loglik));

    const auto with_mu = eval_adaptive(djia, 1.15, rates, true, {0.01, 0.0});
    require(std::abs(with_mu.mean_loglik - 3.3234) <= 0.005,
            "adaptive-mu l(kappa=1.15) = " + num(with_mu.mean_loglik));
    return "l=" + num(laplace.mean_loglik) + ", kappa*=" + num(curve.argmax_kappa) +
           ", l*=" + num(curve.max_loglik) + ", l(mu)=" + num(with_mu.mean_loglik);
}

std::string criterion_djia_curves(const ReturnSeries& djia) {
    std::vector<double> grid;
    for (int i = 0; i <= 30; ++i) grid.push_back(0.7 + 0.05 * i);

    RateConfig rates;
    rates.eta = 0.94;
    const auto stat = sweep_kappa(djia, grid, SweepMode::static_fit, rates);
    const auto adap = sweep_kappa(djia, grid, SweepMode::adaptive_fixed_rate,
                                  rates, false, {0.01, 0.0});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require(adap.loglik[i] > stat.loglik[i],
                "adaptive curve not above static at kappa=" + num(grid[i]));
    }
    require(adap.argmax_kappa > stat.argmax_kappa,
            "adaptive argmax " + num(adap.argmax_kappa) +
                " not above static argmax " + num(stat.argmax_kappa));
    return "adaptive curve strictly above static on [0.7, 2.2]; argmax " +
           num(stat.argmax_kappa) + " -> " + num(adap.argmax_kappa);
}

// ---------- driver ----------

struct Criterion {
    std::string name;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const auto djia = load_djia();

    std::vector<Criterion> criteria = {
        {"1. special-function identities", criterion_special_functions},
        {"2. EPD correctness", criterion_epd},
        {"3. estimator-oracle equivalence", criterion_estimator_oracle},
        {"4. gradient checks", criterion_gradients},
        {"5. adaptivity benefit on regime-switching data", criterion_adaptivity_benefit},
        {"6. parameter recovery", criterion_recovery},
        {"7. walk-forward causality", criterion_causality},
    };
    if (djia) {
        criteria.push_back({"8. DJIA static reproduction",
                            [&] { return criterion_djia_static(*djia); }});
        criteria.push_back({"9. DJIA adaptive reproduction",
                            [&] { return criterion_djia_adaptive(*djia); }});
        criteria.push_back({"10. DJIA curve shape",
                            [&] { return criterion_djia_curves(*djia); }});
    }

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const CheckFailure& f) {
            ok = false;
            detail = f.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::ostringstream line;
        line.precision(1);
        line << std::fixed;
        line << (ok ? "[PASS] " : "[FAIL] ") << c.name << " - " << detail << " ("
             << secs << "s)";
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }

    if (!djia) {
        std::cout << "[SKIP] 8. DJIA static reproduction - set MOVEST_DJIA_CSV to enable"
                  << std::endl;
        std::cout << "[SKIP] 9. DJIA adaptive reproduction - set MOVEST_DJIA_CSV to enable"
                  << std::endl;
        std::cout << "[SKIP] 10. DJIA curve shape - set MOVEST_DJIA_CSV to enable"
                  << std::endl;
    }

    return failures == 0 ? 0 : 1;
}
