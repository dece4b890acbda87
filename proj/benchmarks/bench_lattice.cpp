#include <benchmark/benchmark.h>

#include "tycat/lattice.hpp"

using namespace tycat;

static void BM_DiscriminantForm(benchmark::State& state) {
    auto L = named_lattice("A" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_form(L));
}
BENCHMARK(BM_DiscriminantForm)->Arg(2)->Arg(8)->Arg(24);

static void BM_CountRootsE8(benchmark::State& state) {
    auto L = named_lattice("E8");
    for (auto _ : state) benchmark::DoNotOptimize(count_roots(L));
}
BENCHMARK(BM_CountRootsE8)->Unit(benchmark::kMillisecond);

static void BM_GlueA2E6(benchmark::State& state) {
    auto L = orthogonal_sum(named_lattice("A2"), named_lattice("E6"));
    for (auto _ : state) benchmark::DoNotOptimize(glue(L, {{1, 1}}));
}
BENCHMARK(BM_GlueA2E6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
