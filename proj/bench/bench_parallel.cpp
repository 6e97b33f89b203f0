// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "zmeasure/kernel.hpp"
#include "zmeasure/measure.hpp"
#include "zmeasure/meixner.hpp"
#include "zmeasure/sample.hpp"
#include "zmeasure/verify.hpp"

namespace {

using namespace zmeasure;

const ZParams& base() {
  static const ZParams zp(0.5, 1.0 / 3.0);
  return zp;
}

void BM_ZMeasures(benchmark::State& state) {
  const auto diagrams = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(z_measures(diagrams, base()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}

void BM_ZMeasuresSerial(benchmark::State& state) {
  const auto diagrams = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(z_measures_serial(diagrams, base()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}

void BM_FunctionTable(benchmark::State& state) {
  const GrandParams gp(base(), 0.01 * static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_function_table(gp, 0));
}

void BM_FunctionTableSerial(benchmark::State& state) {
  const GrandParams gp(base(), 0.01 * static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_function_table_serial(gp, 0));
}

void BM_KernelBlock(benchmark::State& state) {
  const HypergeometricKernel k(GrandParams(base(), 0.3), 80);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k.block(Block::PP, n));
}

void BM_KernelBlockSerial(benchmark::State& state) {
  const HypergeometricKernel k(GrandParams(base(), 0.3), 80);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k.block_serial(Block::PP, n));
}

void BM_Oracle(benchmark::State& state) {
  const GrandParams gp(base(), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(CorrelationOracle(gp, static_cast<int>(state.range(0)), 1e-15, true));
}

void BM_OracleSerial(benchmark::State& state) {
  const GrandParams gp(base(), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(CorrelationOracle(gp, static_cast<int>(state.range(0)), 1e-15, false));
}

void BM_Meixner(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(meixner_matrix(3, 0.5, 0.4, static_cast<int>(state.range(0))));
}

void BM_MeixnerSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(meixner_matrix_serial(3, 0.5, 0.4, static_cast<int>(state.range(0))));
}

void BM_Sample(benchmark::State& state) {
  const GrandParams gp(base(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(draw_batch(gp, static_cast<std::size_t>(state.range(0)), 42));
}

void BM_SampleSerial(benchmark::State& state) {
  const GrandParams gp(base(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(draw_batch_serial(gp, static_cast<std::size_t>(state.range(0)), 42));
}

}  // namespace

BENCHMARK(BM_ZMeasures)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZMeasuresSerial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctionTable)->Arg(30)->Arg(90)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctionTableSerial)->Arg(30)->Arg(90)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelBlock)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelBlockSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Meixner)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeixnerSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
