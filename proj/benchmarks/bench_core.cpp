#include <benchmark/benchmark.h>

#include "movest/data_io.hpp"
#include "movest/epd.hpp"
#include "movest/estimate_adaptive.hpp"
#include "movest/estimate_static.hpp"
#include "movest/garch.hpp"
#include "movest/special_functions.hpp"

namespace {

void BM_LnGamma(benchmark::State& state) {
    double a = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(movest::sf::ln_gamma(a));
        a = a < 100.0 ? a + 0.1 : 0.3;
    }
}
BENCHMARK(BM_LnGamma);

void BM_RegLowerGamma(benchmark::State& state) {
    double z = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(movest::sf::reg_lower_gamma(0.87, z));
        z = z < 20.0 ? z + 0.01 : 0.01;
    }
}
BENCHMARK(BM_RegLowerGamma);

void BM_EpdLogPdf(benchmark::State& state) {
    const movest::EpdParams p(1.15, 0.0, 0.01);
    double x = -0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(movest::log_pdf(p, x));
        x = x < 0.05 ? x + 1e-4 : -0.05;
    }
}
BENCHMARK(BM_EpdLogPdf);

void BM_AdaptiveStream(benchmark::State& state) {
    const auto series =
        movest::gen_epd_series(movest::EpdParams(1.0, 0.0, 0.01),
                               std::size_t(state.range(0)), 7);
    movest::RateConfig rates;
    for (auto _ : state) {
        auto st = movest::init_state(0.01, 0.0, 1.15, rates);
        double total = 0.0;
        for (double x : series.values) {
            auto r = movest::adaptive_step(st, x);
            total += r.log_density;
            st = r.state;
        }
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AdaptiveStream)->Arg(1 << 12)->Arg(1 << 15);

void BM_SigmaMle(benchmark::State& state) {
    const auto series =
        movest::gen_epd_series(movest::EpdParams(1.0, 0.0, 0.01),
                               std::size_t(state.range(0)), 11);
    const auto sample = movest::WeightedSample::equal(series.values);
    for (auto _ : state) {
        benchmark::DoNotOptimize(movest::sigma_mle(sample, 0.89, 0.0));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SigmaMle)->Arg(1 << 12)->Arg(1 << 15);

void BM_GarchFilter(benchmark::State& state) {
    const auto sim = movest::gen_garch_series(
        movest::GarchParams(1e-6, 0.08, 0.90, 0.0), std::size_t(state.range(0)), 3);
    const movest::GarchParams p(1e-6, 0.08, 0.90, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            movest::garch_filter(p, sim.returns.values, 1e-4).mean_loglik);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GarchFilter)->Arg(1 << 12)->Arg(1 << 15);

}  // namespace

BENCHMARK_MAIN();
