#include <benchmark/benchmark.h>

#include "padicmin/conjugacy.hpp"
#include "padicmin/criteria.hpp"
#include "padicmin/sweep.hpp"

using namespace padicmin;

namespace {

const IntPolynomial kQuadP3(Prime(3), {1, 1, 6});
const IntPolynomial kRemarkP3(Prime(3), {1, 4, 0, 4, 0, 2});

void BM_ReducedMapTable(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_map_table(kQuadP3, level));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(*prime_power_u64(Prime(3), level)));
}
BENCHMARK(BM_ReducedMapTable)->DenseRange(4, 12, 4);

void BM_FullCycleCheck(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_full_cycle(kQuadP3, level));
}
BENCHMARK(BM_FullCycleCheck)->DenseRange(4, 12, 4);

void BM_ClosedFormZ3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minimal_z3(kRemarkP3));
}
BENCHMARK(BM_ClosedFormZ3);

void BM_DeltaRule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minimal_general(kRemarkP3));
}
BENCHMARK(BM_DeltaRule);

void BM_Sweep(benchmark::State& state) {
  SweepConfig c;
  c.prime = Prime(3);
  c.degree = 4;
  c.coefficient_bound = 9;
  c.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Stream(benchmark::State& state) {
  auto cert = StreamCertificate::from_verdict(kQuadP3, minimal_z3(kQuadP3));
  FullCycleStream s(cert, 30, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.next());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Stream);

}  // namespace

BENCHMARK_MAIN();
