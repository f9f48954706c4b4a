// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the thread count.

#include "fatsys/cycles.hpp"
#include "fatsys/generators.hpp"

#include <benchmark/benchmark.h>

using namespace fatsys;

static void BM_CyclesSerial(benchmark::State& state) {
  const auto g = gen_wheel_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles_serial(g));
}

static void BM_CyclesParallel(benchmark::State& state) {
  const auto g = gen_wheel_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simple_cycles(g));
}

static void BM_GirthSerial(benchmark::State& state) {
  const auto g = gen_unitrivalent_girth(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth_serial(g));
}

static void BM_GirthParallel(benchmark::State& state) {
  const auto g = gen_unitrivalent_girth(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}

BENCHMARK(BM_CyclesSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclesParallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GirthSerial)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GirthParallel)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
