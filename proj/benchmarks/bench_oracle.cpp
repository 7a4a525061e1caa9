#include <benchmark/benchmark.h>

#include "wordmap/oracle.hpp"

using namespace wordmap;

static void BM_Enumerate(benchmark::State& state) {
  const auto spec = GroupSpec::sl(2, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::enumerate(spec, EnumerationBudget()));
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_WordImage(benchmark::State& state) {
  const auto g = MatrixGroup::enumerate(GroupSpec::psl(3, 3), EnumerationBudget());
  for (auto _ : state) benchmark::DoNotOptimize(word_image_size(g, Integer(state.range(0))));
}
BENCHMARK(BM_WordImage)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
