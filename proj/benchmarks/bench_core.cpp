#include <benchmark/benchmark.h>

#include <complex>

#include "blaschke_lab/criteria.hpp"
#include "blaschke_lab/interpolation.hpp"
#include "blaschke_lab/sequences.hpp"

using namespace blaschke_lab;

namespace {

std::size_t size_of(const benchmark::State& state) { return static_cast<std::size_t>(state.range(0)); }

void BM_Evaluate(benchmark::State& state) {
  const BlaschkeProduct b(frostman_example(size_of(state)));
  const Complex z(0.3, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(b(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(2)->Range(8, 48)->Complexity();

void BM_Carleson(benchmark::State& state) {
  const BlaschkeProduct b(frostman_example(size_of(state)));
  for (auto _ : state) benchmark::DoNotOptimize(carleson(b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Carleson)->RangeMultiplier(2)->Range(8, 48)->Complexity();

void BM_SolveKb(benchmark::State& state) {
  const std::size_t n = size_of(state);
  const BlaschkeProduct b(radial_sequence(0.7, n, 0.5));
  const TargetVector alpha = random_targets(n, RngSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(solve_kb(b, alpha));
}
BENCHMARK(BM_SolveKb)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_FrostmanSum(benchmark::State& state) {
  const ZeroSequence a = frostman_example(size_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(frostman_sum(a));
}
BENCHMARK(BM_FrostmanSum)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_LebesgueConstant(benchmark::State& state) {
  const BlaschkeProduct b(frostman_example(size_of(state)));
  for (auto _ : state) benchmark::DoNotOptimize(lebesgue_constant(b));
}
BENCHMARK(BM_LebesgueConstant)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

// Radial zeros: deep frostman_example truncations put roots so close to the
// circle that the residual check cannot pass in double precision.
void BM_FrostmanShift(benchmark::State& state) {
  const BlaschkeProduct b(radial_sequence(0.8, size_of(state), 0.3));
  const DiskPoint w(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(frostman_shift_zeros(b, w));
}
BENCHMARK(BM_FrostmanShift)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_PerturbationReport(benchmark::State& state) {
  const ZeroSequence a = frostman_example(size_of(state));
  const PairedSequences p = perturb_sample(a, 0.5, RngSeed{7});
  const CircleGrid grid{1024, 2, {}};
  for (auto _ : state) benchmark::DoNotOptimize(perturbation_report(p, 0.5, grid));
}
BENCHMARK(BM_PerturbationReport)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
