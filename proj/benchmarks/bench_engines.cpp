#include <benchmark/benchmark.h>

#include "rrcensus/census.hpp"
#include "rrcensus/qseries.hpp"
#include "rrcensus/root_system.hpp"

using namespace rrcensus;

static void BM_weyl_dim(benchmark::State& state)
{
    const Rank rank(static_cast<int>(state.range(0)));
    const Weight lambda = weight_3theta_minus_alpha1(rank);
    for (auto _ : state) {
        auto dim = weyl_dim(rank, lambda);
        benchmark::DoNotOptimize(dim);
    }
}
BENCHMARK(BM_weyl_dim)->Arg(2)->Arg(10)->Arg(50);

static void BM_census_degree(benchmark::State& state)
{
    const Rank rank(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto report = census_degree(rank, -4);
        benchmark::DoNotOptimize(report);
    }
    state.SetLabel("m=-4");
}
BENCHMARK(BM_census_degree)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

static void BM_product_side(benchmark::State& state)
{
    const Rank rank(2);
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto series = product_side(rank, n_max);
        benchmark::DoNotOptimize(series);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_product_side)->Range(40, 640)->Complexity();

static void BM_rr_side(benchmark::State& state)
{
    const Rank rank(2);
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto series = rr_side(rank, n_max);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_rr_side)->Arg(20)->Arg(30)->Arg(40);

BENCHMARK_MAIN();
