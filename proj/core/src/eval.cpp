#include "movest/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "movest/errors.hpp"
#include "movest/garch.hpp"
#include "movest/optimize.hpp"

namespace movest {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSigmaFloor = 1e-150;  // below this the scale has collapsed

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Run fn(i) for i in [0, count) on up to `threads` workers. fn must not throw.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
    const unsigned workers =
        std::min<std::size_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void check_series(const ReturnSeries& returns, std::size_t min_n,
                  const char* who) {
    if (returns.values.size() < min_n) {
        throw std::invalid_argument(std::string(who) + ": needs at least " +
                                    std::to_string(min_n) + " observations, got " +
                                    std::to_string(returns.values.size()));
    }
}

}  // namespace

std::string to_string(SweepMode mode) {
    switch (mode) {
        case SweepMode::static_fit: return "static";
        case SweepMode::adaptive_fixed_rate: return "adaptive";
        case SweepMode::adaptive_optimized_rate: return "adaptive-opt-eta";
    }
    return "unknown";
}

EvalReport eval_static(const ReturnSeries& returns, double kappa) {
    check_series(returns, 10, "eval_static");
    const auto fit = fit_fixed_kappa(WeightedSample::equal(returns.values), kappa);
    EvalReport report;
    report.model_id = "static-epd(kappa=" + fmt(kappa) + ")";
    report.mean_loglik = fit.mean_loglik;
    report.params = {{"kappa", fit.params.kappa},
                     {"mu", fit.params.mu},
                     {"sigma", fit.params.sigma}};
    report.n = returns.values.size();
    return report;
}

EvalReport eval_static_full(const ReturnSeries& returns, KappaRange range) {
    check_series(returns, 10, "eval_static_full");
    const auto fit = fit_full(WeightedSample::equal(returns.values), range);
    EvalReport report;
    report.model_id = "static-epd(full)";
    report.mean_loglik = fit.mean_loglik;
    report.params = {{"kappa", fit.params.kappa},
                     {"mu", fit.params.mu},
                     {"sigma", fit.params.sigma}};
    report.n = returns.values.size();
    return report;
}

EvalReport eval_static_holdout(const ReturnSeries& returns,
                               std::optional<double> kappa,
                               double train_fraction) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
        throw std::invalid_argument("eval_static_holdout: train_fraction must lie in (0,1)");
    }
    const std::size_t n = returns.values.size();
    const std::size_t m = std::size_t(std::ceil(train_fraction * double(n)));
    if (m < 10 || m >= n) {
        throw std::invalid_argument(
            "eval_static_holdout: split leaves too few observations (train " +
            std::to_string(m) + " of " + std::to_string(n) + ")");
    }
    const std::vector<double> train(returns.values.begin(),
                                    returns.values.begin() + long(m));
    const auto fit = kappa ? fit_fixed_kappa(WeightedSample::equal(train), *kappa)
                           : fit_full(WeightedSample::equal(train));

    double total = 0.0;
    for (std::size_t t = m; t < n; ++t) {
        total += log_pdf(fit.params, returns.values[t]);
    }

    EvalReport report;
    report.model_id = "static-epd(kappa=" + fmt(fit.params.kappa) + ",holdout=" +
                      fmt(train_fraction) + ")";
    report.mean_loglik = total / double(n - m);
    report.params = {{"kappa", fit.params.kappa},
                     {"mu", fit.params.mu},
                     {"sigma", fit.params.sigma},
                     {"train_n", double(m)},
                     {"test_n", double(n - m)}};
    report.n = n - m;
    return report;
}

EvalReport eval_adaptive(const ReturnSeries& returns, double kappa,
                         const RateConfig& rates, bool adapt_mu,
                         AdaptiveInit init, bool record_trajectories) {
    check_series(returns, 2, "eval_adaptive");
    RateConfig effective = rates;
    if (!adapt_mu) effective.nu = 1.0;  // location frozen at mu_1

    AdaptiveState state = init_state(init.sigma_1, init.mu_1, kappa, effective);
    const std::size_t n = returns.values.size();

    EvalReport report;
    report.n = n;
    if (record_trajectories) {
        report.trajectories = Trajectories{};
        report.trajectories->sigma.reserve(n);
        report.trajectories->mu.reserve(n);
    }

    double total = 0.0;
    double prev_b = 0.0;
    double prev_x = 0.0;
    bool have_prev = false;
    for (double x : returns.values) {
        if (record_trajectories) {
            report.trajectories->sigma.push_back(state.sigma());
            report.trajectories->mu.push_back(state.mu_hat);
        }
        auto [next, log_density] = adaptive_step(state, x);
        if (!std::isfinite(log_density) || next.b <= 0.0 ||
            std::pow(next.b, 1.0 / kappa) < kSigmaFloor) {
            throw divergence_error(
                "eval_adaptive: scale estimate collapsed at step " +
                std::to_string(state.t) + "; the stream is degenerate for this model");
        }
        total += log_density;
        if (effective.epsilon_eta > 0.0 && have_prev) {
            const double grad =
                eta_gradient(prev_b, prev_x, x, state.kappa, state.mu_hat);
            next.eta = std::clamp(state.eta - effective.epsilon_eta * grad,
                                  kEtaClampLo, kEtaClampHi);
        }
        prev_b = state.b;
        prev_x = x;
        have_prev = true;
        state = next;
    }

    report.model_id = "adaptive-epd(kappa=" + fmt(kappa) + ",eta=" +
                      fmt(rates.eta) +
                      (adapt_mu ? ",nu=" + fmt(rates.nu) : ",mu=fixed") + ")";
    report.mean_loglik = total / double(n);
    report.params = {{"kappa", kappa},          {"eta", rates.eta},
                     {"nu", effective.nu},      {"sigma_1", init.sigma_1},
                     {"mu_1", init.mu_1},       {"final_sigma", state.sigma()},
                     {"final_mu", state.mu_hat}, {"final_eta", state.eta}};
    return report;
}

EvalReport eval_adaptive_aepd(const ReturnSeries& returns, double kappa,
                              const RateConfig& rates, AdaptiveInit init,
                              AlphaMode mode) {
    check_series(returns, 2, "eval_adaptive_aepd");
    AepdAdaptiveState state = init_aepd_state(
        AepdParams::continuous(kappa, kappa, init.sigma_1, init.sigma_1,
                               init.mu_1),
        mode);

    const std::size_t n = returns.values.size();
    double total = 0.0;
    for (double x : returns.values) {
        const double log_density = log_pdf(state.params, x);
        if (!std::isfinite(log_density)) {
            throw divergence_error("eval_adaptive_aepd: non-finite log-density at step " +
                                   std::to_string(state.t));
        }
        total += log_density;
        state = aepd_adapt_step(state, x, rates);
        if (state.params.sigma_l < kSigmaFloor || state.params.sigma_r < kSigmaFloor) {
            throw divergence_error("eval_adaptive_aepd: scale collapsed at step " +
                                   std::to_string(state.t));
        }
    }

    EvalReport report;
    report.model_id = "adaptive-aepd(kappa=" + fmt(kappa) + ",eta=" +
                      fmt(rates.eta) + ",alpha=" +
                      (mode == AlphaMode::continuity ? "continuity" : "frequency") +
                      ")";
    report.mean_loglik = total / double(n);
    report.params = {{"kappa", kappa},
                     {"eta", rates.eta},
                     {"nu", rates.nu},
                     {"sigma_1", init.sigma_1},
                     {"mu_1", init.mu_1},
                     {"final_sigma_l", state.params.sigma_l},
                     {"final_sigma_r", state.params.sigma_r},
                     {"final_mu", state.params.mu},
                     {"final_alpha", state.params.alpha}};
    report.n = n;
    return report;
}

EvalReport eval_garch(const ReturnSeries& returns) {
    const auto fit = garch_fit(returns.values);
    double mean = 0.0;
    for (double x : returns.values) mean += x;
    mean /= double(returns.values.size());
    double var = 0.0;
    for (double x : returns.values) var += (x - mean) * (x - mean);
    var /= double(returns.values.size() - 1);
    const auto filt = garch_filter(fit.params, returns.values, var);

    EvalReport report;
    report.model_id = "garch11";
    report.mean_loglik = filt.mean_loglik;
    report.params = {{"omega", fit.params.omega},
                     {"alpha", fit.params.alpha},
                     {"beta", fit.params.beta},
                     {"mu", fit.params.mu},
                     {"sigma2_init", var},
                     {"converged", fit.converged ? 1.0 : 0.0}};
    report.n = returns.values.size();
    return report;
}

std::vector<double> default_kappa_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(0.5 + 0.05 * i);
    return grid;
}

SweepCurve sweep_kappa(const ReturnSeries& returns,
                       std::span<const double> kappa_grid, SweepMode mode,
                       const RateConfig& rates, bool adapt_mu,
                       AdaptiveInit init, unsigned threads) {
    if (kappa_grid.empty()) {
        throw std::invalid_argument("sweep_kappa: empty kappa grid");
    }
    for (std::size_t i = 1; i < kappa_grid.size(); ++i) {
        if (!(kappa_grid[i] > kappa_grid[i - 1])) {
            throw std::invalid_argument("sweep_kappa: grid must be strictly increasing");
        }
    }

    auto cell = [&](double kappa) -> double {
        switch (mode) {
            case SweepMode::static_fit:
                return eval_static(returns, kappa).mean_loglik;
            case SweepMode::adaptive_fixed_rate:
                return eval_adaptive(returns, kappa, rates, adapt_mu, init, false)
                    .mean_loglik;
            case SweepMode::adaptive_optimized_rate: {
                RateConfig local = rates;
                const double best_eta = golden_section_max(
                    [&](double eta) {
                        local.eta = eta;
                        return eval_adaptive(returns, kappa, local, adapt_mu, init,
                                             false)
                            .mean_loglik;
                    },
                    0.85, 0.999, 24);
                local.eta = best_eta;
                return eval_adaptive(returns, kappa, local, adapt_mu, init, false)
                    .mean_loglik;
            }
        }
        return kNaN;
    };

    SweepCurve curve;
    curve.mode = mode;
    curve.kappa_grid.assign(kappa_grid.begin(), kappa_grid.end());
    curve.loglik.assign(kappa_grid.size(), kNaN);

    parallel_for(kappa_grid.size(), threads, [&](std::size_t i) {
        try {
            curve.loglik[i] = cell(kappa_grid[i]);
        } catch (const std::exception&) {
            curve.loglik[i] = kNaN;  // per-cell failures become gaps
        }
    });

    std::size_t best = kappa_grid.size();
    for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
        if (std::isnan(curve.loglik[i])) continue;
        if (best == kappa_grid.size() || curve.loglik[i] > curve.loglik[best]) {
            best = i;
        }
    }
    if (best == kappa_grid.size()) {
        throw std::runtime_error("sweep_kappa: every grid cell failed");
    }
    curve.argmax_kappa = kappa_grid[best];
    curve.max_loglik = curve.loglik[best];

    // refine inside the bracket formed by the neighbors of the best cell
    if (kappa_grid.size() > 1) {
        const double lo = best > 0 ? kappa_grid[best - 1] : kappa_grid[best];
        const double hi = best + 1 < kappa_grid.size() ? kappa_grid[best + 1]
                                                       : kappa_grid[best];
        if (hi > lo) {
            try {
                const double refined = golden_section_max(cell, lo, hi, 40);
                const double value = cell(refined);
                if (value > curve.max_loglik) {
                    curve.argmax_kappa = refined;
                    curve.max_loglik = value;
                }
            } catch (const std::exception&) {
                // keep the grid argmax
            }
        }
    }
    return curve;
}

namespace {

EvalReport run_spec(const ReturnSeries& returns, const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelSpec::Kind::static_epd:
            return spec.kappa ? eval_static(returns, *spec.kappa)
                              : eval_static_full(returns);
        case ModelSpec::Kind::adaptive_epd:
            if (!spec.kappa) {
                throw std::invalid_argument("adaptive-epd spec requires kappa");
            }
            return eval_adaptive(returns, *spec.kappa, spec.rates, spec.adapt_mu,
                                 spec.init, false);
        case ModelSpec::Kind::garch:
            return eval_garch(returns);
        case ModelSpec::Kind::adaptive_aepd:
            if (!spec.kappa) {
                throw std::invalid_argument("adaptive-aepd spec requires kappa");
            }
            return eval_adaptive_aepd(returns, *spec.kappa, spec.rates, spec.init,
                                      spec.alpha_mode);
    }
    throw std::logic_error("run_spec: unknown model kind");
}

}  // namespace

std::vector<ComparisonEntry> compare_models(const ReturnSeries& returns,
                                            std::span<const ModelSpec> specs,
                                            unsigned threads) {
    if (specs.empty()) {
        throw std::invalid_argument("compare_models: needs at least one model spec");
    }
    std::vector<ComparisonEntry> entries(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        entries[i].spec = specs[i];
        try {
            entries[i].report = run_spec(returns, specs[i]);
        } catch (const std::exception& e) {
            entries[i].error = e.what();
        }
    });

    std::sort(entries.begin(), entries.end(),
              [](const ComparisonEntry& a, const ComparisonEntry& b) {
                  if (a.report.has_value() != b.report.has_value()) {
                      return a.report.has_value();
                  }
                  if (a.report && b.report &&
                      a.report->mean_loglik != b.report->mean_loglik) {
                      return a.report->mean_loglik > b.report->mean_loglik;
                  }
                  return a.spec.id() < b.spec.id();
              });
    return entries;
}

std::vector<double> cdf_normalize(const ReturnSeries& returns,
                                  const ModelSpec& spec) {
    check_series(returns, 2, "cdf_normalize");
    const std::size_t n = returns.values.size();
    std::vector<double> y;
    y.reserve(n);

    switch (spec.kind) {
        case ModelSpec::Kind::static_epd: {
            const auto fit =
                spec.kappa
                    ? fit_fixed_kappa(WeightedSample::equal(returns.values),
                                      *spec.kappa)
                    : fit_full(WeightedSample::equal(returns.values));
            for (double x : returns.values) y.push_back(cdf(fit.params, x));
            break;
        }
        case ModelSpec::Kind::adaptive_epd: {
            if (!spec.kappa) {
                throw std::invalid_argument("adaptive-epd spec requires kappa");
            }
            RateConfig effective = spec.rates;
            if (!spec.adapt_mu) effective.nu = 1.0;
            AdaptiveState state =
                init_state(spec.init.sigma_1, spec.init.mu_1, *spec.kappa, effective);
            for (double x : returns.values) {
                y.push_back(
                    cdf(EpdParams(state.kappa, state.mu_hat, state.sigma()), x));
                state = adaptive_step(state, x).state;
            }
            break;
        }
        case ModelSpec::Kind::garch: {
            const auto fit = garch_fit(returns.values);
            double mean = 0.0;
            for (double x : returns.values) mean += x;
            mean /= double(n);
            double var = 0.0;
            for (double x : returns.values) var += (x - mean) * (x - mean);
            var /= double(n - 1);
            const auto filt = garch_filter(fit.params, returns.values, var);
            for (std::size_t t = 0; t < n; ++t) {
                const double z = (returns.values[t] - fit.params.mu) /
                                 std::sqrt(filt.variance[t]);
                y.push_back(normal_cdf(z));
            }
            break;
        }
        case ModelSpec::Kind::adaptive_aepd: {
            if (!spec.kappa) {
                throw std::invalid_argument("adaptive-aepd spec requires kappa");
            }
            AepdAdaptiveState state = init_aepd_state(
                AepdParams::continuous(*spec.kappa, *spec.kappa, spec.init.sigma_1,
                                       spec.init.sigma_1, spec.init.mu_1),
                spec.alpha_mode);
            for (double x : returns.values) {
                y.push_back(cdf(state.params, x));
                state = aepd_adapt_step(state, x, spec.rates);
            }
            break;
        }
    }

    const double hi = std::nextafter(1.0, 0.0);
    for (double& v : y) v = std::clamp(v, std::numeric_limits<double>::min(), hi);
    return y;
}

double ks_statistic(std::span<const double> y) {
    if (y.empty()) {
        throw std::invalid_argument("ks_statistic: empty sequence");
    }
    std::vector<double> sorted(y.begin(), y.end());
    for (double v : sorted) {
        if (!(v > 0.0) || !(v < 1.0)) {
            throw std::domain_error("ks_statistic: values must lie in (0,1)");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    const double n = double(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        d = std::max(d, std::max((double(i) + 1.0) / n - sorted[i],
                                 sorted[i] - double(i) / n));
    }
    return d;
}

// ---- ModelSpec ----

namespace {

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("ModelSpec: expected key=value, got '" +
                                        item + "'");
        }
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

bool parse_flag(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw std::invalid_argument("ModelSpec: expected boolean, got '" + v + "'");
}

}  // namespace

ModelSpec ModelSpec::parse(const std::string& text) {
    ModelSpec spec;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (head == "static-epd") {
        spec.kind = Kind::static_epd;
    } else if (head == "adaptive-epd") {
        spec.kind = Kind::adaptive_epd;
    } else if (head == "garch" || head == "garch11") {
        spec.kind = Kind::garch;
    } else if (head == "adaptive-aepd") {
        spec.kind = Kind::adaptive_aepd;
    } else {
        throw std::invalid_argument("ModelSpec: unknown model '" + head + "'");
    }

    if (colon != std::string::npos) {
        for (const auto& [key, value] : parse_kv(text.substr(colon + 1))) {
            if (key == "kappa") {
                spec.kappa = std::stod(value);
            } else if (key == "eta") {
                spec.rates.eta = std::stod(value);
            } else if (key == "nu") {
                spec.rates.nu = std::stod(value);
            } else if (key == "xi") {
                spec.rates.xi = std::stod(value);
            } else if (key == "adapt-mu") {
                spec.adapt_mu = parse_flag(value);
            } else if (key == "debias") {
                spec.rates.debias = parse_flag(value);
            } else if (key == "sigma1") {
                spec.init.sigma_1 = std::stod(value);
            } else if (key == "mu1") {
                spec.init.mu_1 = std::stod(value);
            } else if (key == "alpha-mode") {
                if (value == "continuity") {
                    spec.alpha_mode = AlphaMode::continuity;
                } else if (value == "frequency") {
                    spec.alpha_mode = AlphaMode::frequency;
                } else {
                    throw std::invalid_argument("ModelSpec: unknown alpha-mode '" +
                                                value + "'");
                }
            } else {
                throw std::invalid_argument("ModelSpec: unknown key '" + key + "'");
            }
        }
    }

    if ((spec.kind == Kind::adaptive_epd || spec.kind == Kind::adaptive_aepd) &&
        !spec.kappa) {
        throw std::invalid_argument("ModelSpec: " + head + " requires kappa=...");
    }
    return spec;
}

std::string ModelSpec::id() const {
    switch (kind) {
        case Kind::static_epd:
            return kappa ? "static-epd:kappa=" + fmt(*kappa) : "static-epd:full";
        case Kind::adaptive_epd:
            return "adaptive-epd:kappa=" + fmt(*kappa) + ",eta=" + fmt(rates.eta) +
                   (adapt_mu ? ",nu=" + fmt(rates.nu) : ",mu=fixed");
        case Kind::garch:
            return "garch11";
        case Kind::adaptive_aepd:
            return "adaptive-aepd:kappa=" + fmt(*kappa) + ",eta=" + fmt(rates.eta) +
                   ",alpha=" +
                   (alpha_mode == AlphaMode::continuity ? "continuity" : "frequency");
    }
    return "unknown";
}

// ---- serialization ----

namespace {

nlohmann::json report_json(const EvalReport& report) {
    nlohmann::json j;
    j["model"] = report.model_id;
    j["mean_loglik"] = report.mean_loglik;
    j["n"] = report.n;
    j["params"] = report.params;
    if (report.trajectories) {
        j["trajectories"] = {{"sigma", report.trajectories->sigma},
                             {"mu", report.trajectories->mu}};
    }
    return j;
}

}  // namespace

std::string to_json(const EvalReport& report) { return report_json(report).dump(2); }

std::string to_json(const SweepCurve& curve) {
    nlohmann::json j;
    j["mode"] = to_string(curve.mode);
    j["kappa"] = curve.kappa_grid;
    j["loglik"] = curve.loglik;
    j["argmax_kappa"] = curve.argmax_kappa;
    j["max_loglik"] = curve.max_loglik;
    return j.dump(2);
}

std::string to_json(std::span<const ComparisonEntry> entries) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        nlohmann::json j;
        j["rank"] = i + 1;
        j["model"] = entries[i].spec.id();
        if (entries[i].report) {
            j["ok"] = true;
            j["mean_loglik"] = entries[i].report->mean_loglik;
            j["params"] = entries[i].report->params;
        } else {
            j["ok"] = false;
            j["error"] = entries[i].error;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string sweep_csv(const SweepCurve& curve) {
    std::ostringstream out;
    out.precision(17);
    out << "kappa,loglik\n";
    for (std::size_t i = 0; i < curve.kappa_grid.size(); ++i) {
        out << curve.kappa_grid[i] << "," << curve.loglik[i] << "\n";
    }
    return out.str();
}

std::string trajectory_csv(const EvalReport& report) {
    if (!report.trajectories) {
        throw std::invalid_argument("trajectory_csv: report has no trajectories");
    }
    std::ostringstream out;
    out.precision(17);
    out << "t,sigma,mu\n";
    for (std::size_t i = 0; i < report.trajectories->sigma.size(); ++i) {
        out << (i + 1) << "," << report.trajectories->sigma[i] << ","
            << report.trajectories->mu[i] << "\n";
    }
    return out.str();
}

std::string comparison_csv(std::span<const ComparisonEntry> entries) {
    std::ostringstream out;
    out.precision(17);
    out << "rank,model,mean_loglik,error\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << (i + 1) << ",\"" << entries[i].spec.id() << "\",";
        if (entries[i].report) {
            out << entries[i].report->mean_loglik;
        }
        out << ",";
        if (!entries[i].error.empty()) {
            std::string msg = entries[i].error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            out << msg;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace movest
