#include <benchmark/benchmark.h>

#include "wordmap/tori.hpp"

using namespace wordmap;

static void BM_TorusDecompositionAllPartitions(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto q = PrimePower::from_q(9);
  const auto ps = partitions(n);
  for (auto _ : state)
    for (const auto& lambda : ps) benchmark::DoNotOptimize(torus_decomposition(lambda, q, Sign::minus(), true));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}
BENCHMARK(BM_TorusDecompositionAllPartitions)->Arg(6)->Arg(10)->Arg(14);

static void BM_DSequence(benchmark::State& state) {
  const auto q = PrimePower::from_q(7);
  const Partition lambda({5, 4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(d_sequence(lambda, q, Sign::plus()));
}
BENCHMARK(BM_DSequence);
