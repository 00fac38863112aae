#include <benchmark/benchmark.h>

#include "bltk/evaluate.hpp"
#include "bltk/fixtures.hpp"
#include "bltk/formula.hpp"
#include "bltk/metric.hpp"
#include "bltk/norms.hpp"
#include "bltk/topology.hpp"

namespace {

using namespace bltk;

NormKind kind(const benchmark::State& s) { return kContinuousKinds[static_cast<std::size_t>(s.range(0))]; }

void BM_ClosedFormSweep(benchmark::State& state) {
  const SAlgebra alg(kind(state));
  const GridSpec g{state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(d_star_closed_form_check(alg, g));
  state.SetItemsProcessed(state.iterations() * (g.denominator + 1) * (g.denominator + 1));
}
BENCHMARK(BM_ClosedFormSweep)->ArgsProduct({{0, 1, 2}, {64}})->Unit(benchmark::kMillisecond);

void BM_Adjointness(benchmark::State& state) {
  const NormFamily f = s_norm(kind(state));
  const GridSpec g{state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(adjointness_check(f, g));
}
BENCHMARK(BM_Adjointness)->ArgsProduct({{0, 1, 2}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_ContinuityInequalities(benchmark::State& state) {
  const SAlgebra alg(kind(state));
  const GridSpec g{state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(continuity_inequalities_check(alg, g));
  const auto n = g.denominator + 1;
  state.SetItemsProcessed(state.iterations() * n * n * n * n);
}
BENCHMARK(BM_ContinuityInequalities)->ArgsProduct({{0, 1, 2}, {8, 16}})->Unit(benchmark::kMillisecond);

void BM_EnumerateTopology(benchmark::State& state) {
  const FiniteAlgebra alg = fixtures::lukasiewicz_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topology(alg, kMaxEnumerationBound));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateTopology)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_OperationContinuity(benchmark::State& state) {
  const FiniteAlgebra alg = fixtures::goedel_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_operation_continuity(alg));
}
BENCHMARK(BM_OperationContinuity)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  const std::string text = "!(p ^ q) | (p & !q) -> (q <-> 0) & ((p -> q) | (q -> p)) ^ r1 & s_2";
  for (auto _ : state) benchmark::DoNotOptimize(print_formula(parse_formula(text)));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParsePrint);

void BM_PrelinearitySweep(benchmark::State& state) {
  const TAlgebraBackend b(kind(state));
  const auto pts = GridSpec{32}.points();
  for (auto _ : state) benchmark::DoNotOptimize(check_prelinearity_tautology(b, std::span<const UnitValue>(pts)));
}
BENCHMARK(BM_PrelinearitySweep)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
