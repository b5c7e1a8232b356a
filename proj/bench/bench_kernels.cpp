// Serial against OpenMP timings for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "qre/dfact/double_factorization.hpp"
#include "qre/ingest/synthetic.hpp"
#include "qre/pipeline/table.hpp"
#include "qre/verify/fock.hpp"

namespace {

using namespace qre;

void BM_FockMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto exec = state.range(1) ? verify::Execution::parallel : verify::Execution::serial;
  const auto I = ingest::gen_synthetic({n, ingest::pair_count(n), 1.0, 3});
  for (auto _ : state) benchmark::DoNotOptimize(verify::build_fock_matrix(I, exec));
}
BENCHMARK(BM_FockMatrix)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto exec = state.range(1) ? dfact::Execution::parallel : dfact::Execution::serial;
  const auto I = ingest::gen_synthetic({n, ingest::pair_count(n), 1.0, 5});
  for (auto _ : state) benchmark::DoNotOptimize(dfact::factorize(I, 1e-6, 1e-6, exec));
}
BENCHMARK(BM_Factorize)->ArgsProduct({{12, 16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ReproduceTable(benchmark::State& state) {
  const auto rows = pipeline::load_table(pipeline::default_table_path());
  const auto exec = state.range(0) ? pipeline::Execution::parallel : pipeline::Execution::serial;
  for (auto _ : state)
    benchmark::DoNotOptimize(pipeline::reproduce_table(rows, pipeline::Config{}, {}, exec));
}
BENCHMARK(BM_ReproduceTable)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
