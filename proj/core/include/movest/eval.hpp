#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "movest/aepd.hpp"
#include "movest/data_io.hpp"
#include "movest/estimate_adaptive.hpp"

namespace movest {

struct Trajectories {
    std::vector<double> sigma;  // scale used for each observation (pre-update)
    std::vector<double> mu;
};

/// Walk-forward (or in-sample static) evaluation result. mean_loglik is the
/// mean natural-log density per observation; on daily returns densities
/// exceed one, so values around +3 are expected.
struct EvalReport {
    std::string model_id;
    double mean_loglik = 0.0;
    std::map<std::string, double> params;  // fitted / initial parameter summary
    std::optional<Trajectories> trajectories;
    std::size_t n = 0;
};

enum class SweepMode {
    static_fit,
    adaptive_fixed_rate,
    adaptive_optimized_rate,
};

std::string to_string(SweepMode mode);

/// Log-likelihood as a function of the shape parameter. Failed cells are
/// recorded as NaN gaps; argmax_kappa refines the best grid cell.
struct SweepCurve {
    std::vector<double> kappa_grid;
    std::vector<double> loglik;  // NaN marks a failed cell
    double argmax_kappa = 0.0;
    double max_loglik = 0.0;
    SweepMode mode = SweepMode::static_fit;
};

struct AdaptiveInit {
    double sigma_1 = 0.01;
    double mu_1 = 0.0;
};

/// Model selector for comparison runs and CDF normalization.
struct ModelSpec {
    enum class Kind { static_epd, adaptive_epd, garch, adaptive_aepd };

    Kind kind = Kind::static_epd;
    std::optional<double> kappa;  // static: absent = full MLE; adaptive: required
    RateConfig rates;
    bool adapt_mu = false;
    AdaptiveInit init;
    AlphaMode alpha_mode = AlphaMode::continuity;

    /// Parse "static-epd:kappa=2", "adaptive-epd:kappa=1,eta=0.94,adapt-mu=1",
    /// "garch", "adaptive-aepd:kappa=1.5,alpha-mode=frequency", ...
    static ModelSpec parse(const std::string& text);
    std::string id() const;
};

/// In-sample static EPD evaluation at fixed kappa (equal weights).
EvalReport eval_static(const ReturnSeries& returns, double kappa);

/// In-sample static EPD with kappa chosen by full profile MLE.
EvalReport eval_static_full(const ReturnSeries& returns, KappaRange range = {});

/// Held-out variant: fit on the first ceil(train_fraction * n) observations,
/// score the remainder. kappa absent means full profile MLE on the training
/// part. The in-sample eval_static is the default reporting convention.
EvalReport eval_static_holdout(const ReturnSeries& returns,
                               std::optional<double> kappa,
                               double train_fraction = 0.5);

/// Walk-forward adaptive EPD evaluation: each observation is scored under
/// parameters estimated from its strict past. adapt_mu = false pins mu at
/// init.mu_1. Throws divergence_error when the scale estimate collapses.
EvalReport eval_adaptive(const ReturnSeries& returns, double kappa,
                         const RateConfig& rates, bool adapt_mu,
                         AdaptiveInit init = {},
                         bool record_trajectories = false);

/// Walk-forward adaptive AEPD evaluation (symmetric start at init.sigma_1).
EvalReport eval_adaptive_aepd(const ReturnSeries& returns, double kappa,
                              const RateConfig& rates, AdaptiveInit init = {},
                              AlphaMode mode = AlphaMode::continuity);

/// GARCH(1,1) fit + filter, reported on the same mean log-likelihood scale.
EvalReport eval_garch(const ReturnSeries& returns);

/// Per-kappa evaluation over an increasing grid. Cells run concurrently on
/// up to `threads` workers (0 = hardware concurrency).
SweepCurve sweep_kappa(const ReturnSeries& returns,
                       std::span<const double> kappa_grid, SweepMode mode,
                       const RateConfig& rates, bool adapt_mu = false,
                       AdaptiveInit init = {}, unsigned threads = 0);

/// Default grid 0.5..2.5 in steps of 0.05.
std::vector<double> default_kappa_grid();

struct ComparisonEntry {
    ModelSpec spec;
    std::optional<EvalReport> report;  // absent on failure
    std::string error;                 // failure diagnostic
};

/// Evaluate each spec and rank by mean log-likelihood (failures last).
/// The ranking does not depend on the order of the input list.
std::vector<ComparisonEntry> compare_models(const ReturnSeries& returns,
                                            std::span<const ModelSpec> specs,
                                            unsigned threads = 0);

/// Probability integral transform: y_T = CDF_T(x_T) under the parameters in
/// force at time T (pre-update for adaptive models, the in-sample fit for
/// static ones). Values are clamped into the open unit interval.
std::vector<double> cdf_normalize(const ReturnSeries& returns,
                                  const ModelSpec& spec);

/// Kolmogorov-Smirnov sup-distance between the empirical CDF of y and the
/// uniform CDF. All values must lie in (0, 1).
double ks_statistic(std::span<const double> y);

// ---- serialization ----

std::string to_json(const EvalReport& report);
std::string to_json(const SweepCurve& curve);
std::string to_json(std::span<const ComparisonEntry> entries);
std::string sweep_csv(const SweepCurve& curve);            // kappa,loglik rows
std::string trajectory_csv(const EvalReport& report);      // t,sigma,mu rows
std::string comparison_csv(std::span<const ComparisonEntry> entries);

}  // namespace movest
