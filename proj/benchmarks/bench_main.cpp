#include "qzeta/bruteforce.hpp"
#include "qzeta/nested_sum.hpp"
#include "qzeta/pipeline.hpp"
#include "qzeta/qmforms.hpp"
#include "qzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace qzeta;

static void BM_OkounkovDepth2(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(okounkov_z({3, 2}, N));
}
BENCHMARK(BM_OkounkovDepth2)->Arg(20)->Arg(40)->Arg(80);

static void BM_NestedSumH11(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_builtin("h11_4", N));
}
BENCHMARK(BM_NestedSumH11)->Arg(15)->Arg(30);

static void BM_DecomposeWeight6(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    RSeries f = eval_builtin("h11_0", N);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(f, 6, N));
}
BENCHMARK(BM_DecomposeWeight6)->Arg(20)->Arg(40);

static void BM_BruteForceWords(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(fock_trace_bruteforce_all(2, 4, 12));
}
BENCHMARK(BM_BruteForceWords);

static void BM_EquivCh1Ch1(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(equiv_ch1ch1(2, N));
}
BENCHMARK(BM_EquivCh1Ch1)->Arg(10)->Arg(15);

static void BM_SurfaceCh1Ch1(benchmark::State& state)
{
    const int N = static_cast<int>(state.range(0));
    const auto S = SurfaceModel::projective({"L1", "L2"});
    for (auto _ : state) benchmark::DoNotOptimize(ch1ch1_reduced(S, N));
}
BENCHMARK(BM_SurfaceCh1Ch1)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
