// Serial reference vs OpenMP kernels on the workloads the acceptance suite runs.

#include <benchmark/benchmark.h>

#include "kunits/classify.hpp"
#include "kunits/kernels.hpp"

namespace kk = kunits::kernels;

static void BM_DuTableSerial(benchmark::State& state)
{
    const auto n_hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kk::du_table_serial(1, n_hi, 1, 64));
}
BENCHMARK(BM_DuTableSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_DuTableParallel(benchmark::State& state)
{
    const auto n_hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kk::du_table_parallel(1, n_hi, 1, 64));
}
BENCHMARK(BM_DuTableParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_BruteRduOne(benchmark::State& state, kk::Execution exec)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kk::filter(exec, 1, hi, [](std::uint64_t n) { return kk::brute_rdu_one(n, 24); }));
    }
}
BENCHMARK_CAPTURE(BM_BruteRduOne, serial, kk::Execution::serial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BruteRduOne, parallel, kk::Execution::parallel)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_CarmichaelSweep(benchmark::State& state, kk::Execution exec)
{
    kunits::SweepSpec spec{3, static_cast<std::uint64_t>(state.range(0)), kunits::ExponentRule::parse("n-1"), true, true};
    for (auto _ : state) benchmark::DoNotOptimize(kunits::sweep(spec, exec));
}
BENCHMARK_CAPTURE(BM_CarmichaelSweep, serial, kk::Execution::serial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CarmichaelSweep, parallel, kk::Execution::parallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_GenCarmichael(benchmark::State& state, kk::Execution exec)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kk::filter(exec, 2, hi, [](std::uint64_t n) { return kk::brute_all_residues_fixed(n, n + 1); }));
    }
}
BENCHMARK_CAPTURE(BM_GenCarmichael, serial, kk::Execution::serial)->Arg(20'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GenCarmichael, parallel, kk::Execution::parallel)->Arg(20'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
