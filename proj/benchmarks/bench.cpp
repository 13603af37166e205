#include <benchmark/benchmark.h>

#include "pib/distribution.hpp"
#include "pib/inequality.hpp"
#include "pib/oracle.hpp"
#include "pib/sampler.hpp"

namespace {

void BM_RhoTable(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pib::rho_table(n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RhoTable)->Range(1 << 10, 1 << 22)->Complexity();

void BM_RhoTableAlpha(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pib::rho_table(n, 1.7));
    }
}
BENCHMARK(BM_RhoTableAlpha)->Range(1 << 10, 1 << 20);

void BM_Multiplicity(benchmark::State& state) {
    const pib::BoxEnsemble ensemble(state.range(0), state.range(0) * 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pib::multiplicity(ensemble));
    }
}
BENCHMARK(BM_Multiplicity)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SampleConfiguration(benchmark::State& state) {
    const pib::BoxEnsemble ensemble(state.range(0), state.range(0) * 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pib::sample_configuration(ensemble, seed++));
    }
}
BENCHMARK(BM_SampleConfiguration)->Arg(5)->Arg(100)->Arg(10000);

void BM_OccupancyHistogram(benchmark::State& state) {
    const pib::BoxEnsemble ensemble(5, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pib::occupancy_histogram(ensemble, state.range(0), 42, static_cast<int>(state.range(1))));
    }
}
BENCHMARK(BM_OccupancyHistogram)->Args({100000, 1})->Args({100000, 4})->Args({100000, 8});

void BM_LorenzGini(benchmark::State& state) {
    const std::vector<double> shares = pib::quantile_shares(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pib::lorenz_gini(shares));
    }
}
BENCHMARK(BM_LorenzGini)->Range(1 << 6, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
