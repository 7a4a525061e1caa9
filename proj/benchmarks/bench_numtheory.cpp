#include <benchmark/benchmark.h>

#include "wordmap/abelian.hpp"
#include "wordmap/numtheory.hpp"

using namespace wordmap;

static void BM_StirlingRow(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling_first_row(n));
}
BENCHMARK(BM_StirlingRow)->Arg(50)->Arg(200)->Arg(1000);

static void BM_SmithDiagonal(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Integer(static_cast<long>((i * 7 + j * 13 + i * j) % 29 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_diagonal(m));
}
BENCHMARK(BM_SmithDiagonal)->Arg(4)->Arg(8)->Arg(16);
