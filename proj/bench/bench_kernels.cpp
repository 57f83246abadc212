#include <benchmark/benchmark.h>

#include "crossnum/kernels.hpp"
#include "crossnum/spectra.hpp"

using namespace crossnum;

static void BM_CountSerial(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::count_cross(R, 3));
}
BENCHMARK(BM_CountSerial)->Arg(1 << 10)->Arg(1 << 13);

static void BM_CountOmp(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::count_cross(R, 3));
}
BENCHMARK(BM_CountOmp)->Arg(1 << 10)->Arg(1 << 13);

static void BM_InverseWeightsSerial(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    const auto kind = WeightKind::plus(1.5);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::inverse_weights(kind, R, 2));
}
BENCHMARK(BM_InverseWeightsSerial)->Arg(1 << 12)->Arg(1 << 15);

static void BM_InverseWeightsOmp(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    const auto kind = WeightKind::plus(1.5);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::inverse_weights(kind, R, 2));
}
BENCHMARK(BM_InverseWeightsOmp)->Arg(1 << 12)->Arg(1 << 15);

static void BM_CountIdentity(benchmark::State& state) {
    const auto R = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_cross({R, 4}));
}
BENCHMARK(BM_CountIdentity)->Arg(1 << 16)->Arg(1 << 24);

static void BM_RearrangedPlus(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    SpectrumOptions opts;
    opts.parallel = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(rearranged_spectrum(WeightKind::plus(1.0), 2, n, opts));
}
BENCHMARK(BM_RearrangedPlus)->Args({10000, 0})->Args({10000, 1});

BENCHMARK_MAIN();
