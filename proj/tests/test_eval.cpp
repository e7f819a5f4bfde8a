#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "movest/errors.hpp"
#include "movest/eval.hpp"
#include "support/oracles.hpp"

using namespace movest;

namespace {

ReturnSeries regime_fixture(std::uint64_t seed, int pairs = 10) {
    std::vector<RegimeBlock> schedule;
    for (int i = 0; i < pairs; ++i) {
        schedule.push_back({500, 0.01});
        schedule.push_back({500, 0.03});
    }
    return gen_regime_switching(1.0, schedule, seed).returns;
}

}  // namespace

TEST_CASE("eval_static approaches the Gaussian entropy rate") {
    const auto series = gen_epd_series(EpdParams(2.0, 0.0, 1.0), 100000, 233);
    const auto report = eval_static(series, 2.0);
    const double analytic = -0.5 * std::log(2.0 * M_PI) - 0.5;
    CHECK(std::abs(report.mean_loglik - analytic) < 0.01);
    CHECK(report.n == series.values.size());
    CHECK(report.params.at("kappa") == 2.0);
}

TEST_CASE("the held-out static mode fits on the head only") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.01), 20000, 563);
    const auto holdout = eval_static_holdout(series, 1.0, 0.5);

    // parameters must come from the training half alone
    const std::vector<double> head(series.values.begin(),
                                   series.values.begin() + 10000);
    const auto train_fit = fit_fixed_kappa(WeightedSample::equal(head), 1.0);
    CHECK(holdout.params.at("sigma") ==
          doctest::Approx(train_fit.params.sigma).epsilon(1e-14));

    // on stationary data the held-out score approaches the in-sample one
    const auto insample = eval_static(series, 1.0);
    CHECK(std::abs(holdout.mean_loglik - insample.mean_loglik) < 0.05);
    CHECK(holdout.n == 10000);

    CHECK_THROWS_AS(eval_static_holdout(series, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("eval_adaptive matches the vectorized shifted-EMA evaluation") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0005, 0.01), 4000, 239);
    RateConfig rates;
    rates.eta = 0.94;
    rates.nu = 0.997;

    SUBCASE("fixed location") {
        const auto report = eval_adaptive(series, 1.3, rates, false, {0.01, 0.0});
        const double oracle = oracles::vectorized_adaptive_mean_loglik(
            series.values, 1.3, 0.01, 0.0, 0.94, 1.0);
        CHECK(std::abs(report.mean_loglik - oracle) < 1e-12);
    }
    SUBCASE("adaptive location") {
        const auto report = eval_adaptive(series, 1.15, rates, true, {0.01, 0.0});
        const double oracle = oracles::vectorized_adaptive_mean_loglik(
            series.values, 1.15, 0.01, 0.0, 0.94, 0.997);
        CHECK(std::abs(report.mean_loglik - oracle) < 1e-12);
    }
}

TEST_CASE("eval_adaptive records the pre-update trajectories") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.01), 50, 241);
    RateConfig rates;
    const auto report = eval_adaptive(series, 1.0, rates, true, {0.01, 0.0}, true);
    REQUIRE(report.trajectories.has_value());
    CHECK(report.trajectories->sigma.size() == series.values.size());
    CHECK(report.trajectories->sigma[0] == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(report.trajectories->mu[0] == 0.0);
}

TEST_CASE("a constant stream at the pinned location is flagged as divergent") {
    ReturnSeries zeros;
    zeros.values.assign(8000, 0.0);
    RateConfig rates;
    CHECK_THROWS_AS(eval_adaptive(zeros, 1.0, rates, false, {0.01, 0.0}),
                    divergence_error);
}

TEST_CASE("harness-level causality: appending an observation changes nothing before it") {
    auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.01), 300, 251);
    ModelSpec spec = ModelSpec::parse("adaptive-epd:kappa=1.2,eta=0.94");
    const auto y = cdf_normalize(series, spec);
    auto longer = series;
    longer.values.push_back(0.12);
    const auto y2 = cdf_normalize(longer, spec);
    for (std::size_t t = 0; t < y.size(); ++t) {
        CHECK(y[t] == y2[t]);
    }
}

TEST_CASE("sweep in static mode equals independent static fits") {
    const auto series = gen_epd_series(EpdParams(1.5, 0.0, 0.02), 3000, 257);
    const std::vector<double> grid = {1.0, 1.25, 1.5, 1.75, 2.0};
    const auto curve = sweep_kappa(series, grid, SweepMode::static_fit, {});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(curve.loglik[i] ==
              doctest::Approx(eval_static(series, grid[i]).mean_loglik).epsilon(1e-14));
    }
}

TEST_CASE("sweep results do not depend on the thread count") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.02), 2000, 263);
    const std::vector<double> grid = {0.8, 1.0, 1.2, 1.4};
    RateConfig rates;
    const auto one = sweep_kappa(series, grid, SweepMode::adaptive_fixed_rate,
                                 rates, false, {0.01, 0.0}, 1);
    const auto four = sweep_kappa(series, grid, SweepMode::adaptive_fixed_rate,
                                  rates, false, {0.01, 0.0}, 4);
    CHECK(one.loglik == four.loglik);
    CHECK(one.argmax_kappa == four.argmax_kappa);
}

TEST_CASE("single-cell sweep degenerates cleanly") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.02), 2000, 269);
    const std::vector<double> grid = {1.1};
    const auto curve = sweep_kappa(series, grid, SweepMode::static_fit, {});
    CHECK(curve.argmax_kappa == 1.1);
    CHECK(curve.max_loglik == curve.loglik[0]);
}

TEST_CASE("adaptive sweep dominates static on regime-switching data") {
    const auto series = regime_fixture(271);
    std::vector<double> grid;
    for (int i = 0; i <= 13; ++i) grid.push_back(0.7 + 0.1 * i);

    RateConfig rates;
    rates.eta = 0.94;
    const auto stat = sweep_kappa(series, grid, SweepMode::static_fit, rates);
    const auto adap = sweep_kappa(series, grid, SweepMode::adaptive_fixed_rate,
                                  rates, false, {0.01, 0.0});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(adap.loglik[i] > stat.loglik[i]);
    }
}

TEST_CASE("grid validation") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.02), 500, 277);
    CHECK_THROWS_AS(sweep_kappa(series, std::vector<double>{}, SweepMode::static_fit, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        sweep_kappa(series, std::vector<double>{1.0, 1.0}, SweepMode::static_fit, {}),
        std::invalid_argument);
}

TEST_CASE("optimized-rate sweep is at least as good as the fixed rate") {
    const auto series = regime_fixture(281, 2);
    const std::vector<double> grid = {0.9, 1.1};
    RateConfig rates;
    rates.eta = 0.94;
    const auto fixed = sweep_kappa(series, grid, SweepMode::adaptive_fixed_rate,
                                   rates, false, {0.01, 0.0});
    const auto opt = sweep_kappa(series, grid, SweepMode::adaptive_optimized_rate,
                                 rates, false, {0.01, 0.0});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(opt.loglik[i] >= fixed.loglik[i] - 1e-9);
    }
}

TEST_CASE("compare_models ranks sensibly and ignores list order") {
    const auto garch_data =
        gen_garch_series(GarchParams(1e-6, 0.08, 0.9, 0.0), 5000, 283).returns;

    std::vector<ModelSpec> specs = {
        ModelSpec::parse("static-epd:kappa=2"),
        ModelSpec::parse("garch"),
        ModelSpec::parse("adaptive-epd:kappa=2,eta=0.94"),
        ModelSpec::parse("adaptive-aepd:kappa=2,eta=0.94"),
    };
    const auto ranked = compare_models(garch_data, specs);
    REQUIRE(ranked.size() == 4);
    for (const auto& entry : ranked) CHECK(entry.report.has_value());

    const auto rank_of = [&](const std::string& id) {
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            if (ranked[i].spec.id() == id) return i;
        }
        return ranked.size();
    };
    CHECK(rank_of("garch11") < rank_of("static-epd:kappa=2"));

    std::reverse(specs.begin(), specs.end());
    const auto ranked2 = compare_models(garch_data, specs);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CHECK(ranked[i].spec.id() == ranked2[i].spec.id());
    }
}

TEST_CASE("compare_models on regime data prefers the adaptive model") {
    const auto series = regime_fixture(293, 4);
    const std::vector<ModelSpec> specs = {
        ModelSpec::parse("static-epd:kappa=1"),
        ModelSpec::parse("adaptive-epd:kappa=1,eta=0.94"),
    };
    const auto ranked = compare_models(series, specs);
    CHECK(ranked[0].spec.id() == "adaptive-epd:kappa=1,eta=0.94,mu=fixed");
    CHECK(ranked[0].report->mean_loglik > ranked[1].report->mean_loglik);
}

TEST_CASE("compare_models records failures inline") {
    ReturnSeries tiny;
    tiny.values = {0.01, -0.02, 0.005, 0.0, 0.01, -0.01, 0.02, -0.005, 0.01,
                   -0.01, 0.03, 0.01};
    const std::vector<ModelSpec> specs = {
        ModelSpec::parse("static-epd:kappa=1"),
        ModelSpec::parse("garch"),  // needs 100 observations, will fail
    };
    const auto ranked = compare_models(tiny, specs);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].report.has_value());
    CHECK_FALSE(ranked[1].report.has_value());
    CHECK(ranked[1].error.find("100") != std::string::npos);
}

TEST_CASE("single-spec comparison yields one row") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.02), 1000, 307);
    const std::vector<ModelSpec> specs = {ModelSpec::parse("static-epd:kappa=1")};
    CHECK(compare_models(series, specs).size() == 1);
}

TEST_CASE("cdf_normalize produces near-uniform values under the true model") {
    const auto series = gen_epd_series(EpdParams(1.5, 0.0, 0.01), 10000, 311);
    const auto y = cdf_normalize(series, ModelSpec::parse("static-epd:kappa=1.5"));
    CHECK(y.size() == series.values.size());
    CHECK(ks_statistic(y) < 1.63 / std::sqrt(double(y.size())));
}

TEST_CASE("cdf_normalize pins the center at one half") {
    auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.01), 100, 313);
    series.values[57] = 0.0;  // exactly the pinned location
    const auto y = cdf_normalize(series, ModelSpec::parse("adaptive-epd:kappa=1,eta=0.94"));
    CHECK(y[57] == 0.5);
}

TEST_CASE("adaptive normalization beats static on regime-switching data") {
    const auto series = regime_fixture(317, 4);
    const auto y_static =
        cdf_normalize(series, ModelSpec::parse("static-epd:kappa=1"));
    const auto y_adaptive =
        cdf_normalize(series, ModelSpec::parse("adaptive-epd:kappa=1,eta=0.94"));
    CHECK(ks_statistic(y_adaptive) < ks_statistic(y_static));
}

TEST_CASE("ks_statistic") {
    CHECK(ks_statistic(std::vector<double>{0.5}) == doctest::Approx(0.5).epsilon(1e-15));

    std::vector<double> spaced;
    const std::size_t n = 40;
    for (std::size_t i = 1; i <= n; ++i) spaced.push_back((double(i) - 0.5) / double(n));
    CHECK(ks_statistic(spaced) == doctest::Approx(0.5 / double(n)).epsilon(1e-12));

    oracles::Rng rng(331);
    std::vector<double> u;
    for (int i = 0; i < 10000; ++i) u.push_back(rng.uniform(0.0, 1.0));
    CHECK(ks_statistic(u) < 0.0163);

    CHECK_THROWS_AS(ks_statistic(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(ks_statistic(std::vector<double>{0.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(ks_statistic(std::vector<double>{0.0}), std::domain_error);
}

TEST_CASE("model spec parsing") {
    const auto spec = ModelSpec::parse("adaptive-epd:kappa=1.15,eta=0.94,nu=0.997,adapt-mu=1");
    CHECK(spec.kind == ModelSpec::Kind::adaptive_epd);
    CHECK(spec.kappa == 1.15);
    CHECK(spec.rates.eta == 0.94);
    CHECK(spec.adapt_mu);
    CHECK(spec.id() == "adaptive-epd:kappa=1.15,eta=0.94,nu=0.997");

    CHECK(ModelSpec::parse("garch").id() == "garch11");
    CHECK(ModelSpec::parse("static-epd").id() == "static-epd:full");

    CHECK_THROWS_AS(ModelSpec::parse("mystery-model"), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::parse("adaptive-epd:eta=0.9"), std::invalid_argument);
    CHECK_THROWS_AS(ModelSpec::parse("static-epd:frobnicate=1"), std::invalid_argument);
}

TEST_CASE("eta gradient adaptation stays inside the clamp range") {
    const auto series = regime_fixture(337, 2);
    RateConfig rates;
    rates.eta = 0.94;
    rates.epsilon_eta = 1e-3;
    const auto report = eval_adaptive(series, 1.0, rates, false, {0.01, 0.0});
    CHECK(report.params.at("final_eta") >= kEtaClampLo);
    CHECK(report.params.at("final_eta") <= kEtaClampHi);
    CHECK(std::isfinite(report.mean_loglik));
}

TEST_CASE("adaptive AEPD evaluation runs and reports") {
    const auto series = regime_fixture(347, 2);
    RateConfig rates;
    rates.eta = 0.94;
    const auto report = eval_adaptive_aepd(series, 1.0, rates, {0.01, 0.0});
    CHECK(std::isfinite(report.mean_loglik));
    CHECK(report.params.at("final_alpha") > 0.0);
    CHECK(report.params.at("final_alpha") < 1.0);
    // near-symmetric data keeps the sides near each other
    CHECK(report.params.at("final_sigma_l") > 0.0);
    CHECK(report.params.at("final_sigma_r") > 0.0);
}

TEST_CASE("serialization shapes") {
    const auto series = gen_epd_series(EpdParams(1.0, 0.0, 0.02), 1000, 349);
    const auto report = eval_static(series, 1.0);
    const auto js = to_json(report);
    CHECK(js.find("\"model\"") != std::string::npos);
    CHECK(js.find("mean_loglik") != std::string::npos);

    const std::vector<double> grid = {0.9, 1.0, 1.1};
    const auto curve = sweep_kappa(series, grid, SweepMode::static_fit, {});
    const auto csv = sweep_csv(curve);
    CHECK(csv.rfind("kappa,loglik\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    RateConfig rates;
    const auto adaptive =
        eval_adaptive(series, 1.0, rates, true, {0.01, 0.0}, true);
    const auto traj = trajectory_csv(adaptive);
    CHECK(traj.rfind("t,sigma,mu\n", 0) == 0);
    CHECK(std::count(traj.begin(), traj.end(), '\n') == long(series.values.size()) + 1);
}
