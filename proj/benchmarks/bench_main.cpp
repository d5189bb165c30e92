#include <benchmark/benchmark.h>

#include "ordram/arrow.hpp"
#include "ordram/coloring.hpp"
#include "ordram/embedding.hpp"
#include "ordram/queue_layout.hpp"
#include "ordram/search.hpp"

using namespace ordram;

static void BM_EncodeArrow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto red = nested_matching(4);
  const auto blue = complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(encode_arrow(n, red, blue, {}));
}
BENCHMARK(BM_EncodeArrow)->Arg(12)->Arg(16)->Arg(20);

static void BM_SolveNm4K3(benchmark::State& state) {
  const auto inst = encode_arrow(static_cast<int>(state.range(0)), nested_matching(4),
                                 complete_graph(3), {});
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst).status);
}
BENCHMARK(BM_SolveNm4K3)->Arg(15)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_QueuePartition(benchmark::State& state) {
  const auto red = general_construction_chi(static_cast<int>(state.range(0))).red_graph();
  for (auto _ : state) benchmark::DoNotOptimize(queue_partition(red));
}
BENCHMARK(BM_QueuePartition)->Arg(6)->Arg(10)->Arg(16);

static void BM_VerifyChi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto chi = general_construction_chi(n);
  const auto red = nested_matching(n);
  const auto blue = complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_avoiding(chi, red, blue));
}
BENCHMARK(BM_VerifyChi)->Arg(6)->Arg(10)->Arg(16);

static void BM_BacktrackingEmbedding(benchmark::State& state) {
  const auto host = complete_graph(static_cast<int>(state.range(0)));
  const OrderedGraph pattern(5, {{1, 3}, {2, 3}, {2, 4}, {4, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(find_embedding_backtracking(host, pattern));
}
BENCHMARK(BM_BacktrackingEmbedding)->Arg(8)->Arg(32);
BENCHMARK_MAIN();
