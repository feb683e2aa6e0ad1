// Serial reference vs OpenMP kernels on the two scan surfaces.

#include <benchmark/benchmark.h>

#include "einq/scan.hpp"

namespace {

void BM_exception_scan_serial(benchmark::State& state) {
    einq::ScanBounds bounds{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 3};
    for (auto _ : state) {
        auto rows = einq::scan_exceptions(bounds, einq::Execution::Serial);
        benchmark::DoNotOptimize(rows.size());
    }
}

void BM_exception_scan_parallel(benchmark::State& state) {
    einq::ScanBounds bounds{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 3};
    for (auto _ : state) {
        auto rows = einq::scan_exceptions(bounds, einq::Execution::Parallel);
        benchmark::DoNotOptimize(rows.size());
    }
}

void BM_certify_serial(benchmark::State& state) {
    einq::ScanBounds bounds{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1};
    einq::SolveOptions opts;
    for (auto _ : state) {
        auto rows = einq::certify_families(bounds, opts, einq::Execution::Serial);
        benchmark::DoNotOptimize(rows.size());
    }
}

void BM_certify_parallel(benchmark::State& state) {
    einq::ScanBounds bounds{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1};
    einq::SolveOptions opts;
    for (auto _ : state) {
        auto rows = einq::certify_families(bounds, opts, einq::Execution::Parallel);
        benchmark::DoNotOptimize(rows.size());
    }
}

}  // namespace

BENCHMARK(BM_exception_scan_serial)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exception_scan_parallel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
