#include <benchmark/benchmark.h>

#include "qconcept/core.hpp"
#include "qconcept/dataset.hpp"
#include "qconcept/hilbert_c3.hpp"
#include "qconcept/r8_solver.hpp"

namespace {

using namespace qc;

void BM_Classify(benchmark::State& state) {
  const Dataset d = embedded_samples();
  for (auto _ : state) {
    for (const ConceptPair& p : d.pairs) {
      for (const Item& it : p.items) benchmark::DoNotOptimize(classify(it.t));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(d.item_count()));
}
BENCHMARK(BM_Classify);

void BM_BuildC3(benchmark::State& state) {
  const MembershipTriple t{0.4, 0.7, 0.45, Connective::Disjunction};
  for (auto _ : state) benchmark::DoNotOptimize(build_c3(t));
}
BENCHMARK(BM_BuildC3);

void BM_SolveR8(benchmark::State& state) {
  const MembershipTriple t{1, 0.75, 0.7, Connective::Disjunction};
  R8Options o;
  o.scan_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_r8(t, {108.4354, 12}, o));
}
BENCHMARK(BM_SolveR8)->Arg(400)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_SolveR8Conjunction(benchmark::State& state) {
  const MembershipTriple t{0.95, 0.175, 0.3077, Connective::Conjunction};
  for (auto _ : state) benchmark::DoNotOptimize(solve_r8(t, {65.5, 0}));
}
BENCHMARK(BM_SolveR8Conjunction)->Unit(benchmark::kMicrosecond);

void BM_FitPairAngles(benchmark::State& state) {
  const std::vector<MembershipTriple> items = {{1, 0.75, 0.7, Connective::Disjunction},
                                               {0.5, 0.5, 0.75, Connective::Disjunction}};
  for (auto _ : state) benchmark::DoNotOptimize(fit_pair_angles(items, Connective::Disjunction));
}
BENCHMARK(BM_FitPairAngles)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
