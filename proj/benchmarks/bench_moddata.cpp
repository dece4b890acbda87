#include <benchmark/benchmark.h>

#include "tycat/moddata.hpp"

using namespace tycat;

namespace {
Bichar default_bichar(int64_t n) { return *classify_metric_groups(FinAbGroup({n})).front().b; }
}  // namespace

static void BM_CycNumMul(benchmark::State& state) {
    CycNum a = CycNum(1) + CycNum::zeta(48, 5) - CycNum(Rational(2, 3)) * CycNum::zeta(48, 17);
    CycNum b = CycNum::zeta(48, 7) + CycNum(3) * CycNum::zeta(48, 29);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycNumMul);

static void BM_TYCenterBuild(benchmark::State& state) {
    auto b = default_bichar(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ty_center_md(b, 1));
}
BENCHMARK(BM_TYCenterBuild)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CheckInvariantsTY(benchmark::State& state) {
    auto md = ty_center_md(default_bichar(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_invariants(md));
}
BENCHMARK(BM_CheckInvariantsTY)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_VerlindeMP(benchmark::State& state) {
    auto md = mp_md(default_bichar(state.range(0)), -1);
    for (auto _ : state) benchmark::DoNotOptimize(verlinde_fusion(md));
}
BENCHMARK(BM_VerlindeMP)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Factorization(benchmark::State& state) {
    auto m = classify_metric_groups(FinAbGroup({state.range(0)})).front();
    auto ty = ty_center_md(*m.b, 1);
    auto prod = tensor_md(mp_md(*m.b, 1), pointed_md(m.q.conj()));
    for (auto _ : state) benchmark::DoNotOptimize(md_equivalent(ty, prod, 64));
}
BENCHMARK(BM_Factorization)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ClassifyMP(benchmark::State& state) {
    FinAbGroup G({state.range(0)});
    for (auto _ : state) benchmark::DoNotOptimize(classify_mp(G));
}
BENCHMARK(BM_ClassifyMP)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
