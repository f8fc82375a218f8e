#include <benchmark/benchmark.h>

#include "apxmine/oracle.hpp"
#include "apxmine/search.hpp"

using namespace apxmine;

namespace {

TransactionDatabase bench_db(std::size_t m, double density) {
  return generate_synthetic(400, m, density, 7);
}

}  // namespace

static void BM_MineBest(benchmark::State& state) {
  const auto db = bench_db(static_cast<std::size_t>(state.range(0)), 0.3);
  const auto index = build_vertical(db);
  SearchConfig cfg;  // defaults: ar0 = 1, epoch = 1000, delta = 0.1
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto result = mine_best(db, index, cfg);
    nodes += result.nodes_visited;
    benchmark::DoNotOptimize(result.ar_final);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(nodes));
}
BENCHMARK(BM_MineBest)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_MineTop10Dense(benchmark::State& state) {
  const auto db = bench_db(14, 0.7);
  const auto index = build_vertical(db);
  SearchConfig cfg;
  cfg.k = 10;
  for (auto _ : state) {
    auto result = mine_top_k(db, index, cfg);
    benchmark::DoNotOptimize(result.patterns.size());
  }
}
BENCHMARK(BM_MineTop10Dense)->Unit(benchmark::kMillisecond);

static void BM_PushPopWalk(benchmark::State& state) {
  const auto db = bench_db(static_cast<std::size_t>(state.range(0)), 0.4);
  const auto index = build_vertical(db);
  EvalState eval(db, index);
  for (auto _ : state) {
    double sum = 0.0;
    for (ItemPos pos = 0; pos < db.item_count(); ++pos) {
      eval.push(pos);
      sum += eval.objective();
    }
    for (ItemPos pos = 0; pos < db.item_count(); ++pos) eval.pop();
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * db.item_count() * 2);
}
BENCHMARK(BM_PushPopWalk)->Arg(16)->Arg(64);

static void BM_SubtreeBound(benchmark::State& state) {
  const auto db = bench_db(24, 0.4);
  const BoundContext ctx(db);
  Pattern prefix{0, 2, 5};
  std::uint64_t s_lin = 0;
  for (ItemPos pos : prefix) s_lin += db.support(pos);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ub_subtree(ctx, prefix, s_lin));
  }
}
BENCHMARK(BM_SubtreeBound);

static void BM_TopNFrequent(benchmark::State& state) {
  const auto db = bench_db(16, 0.5);
  for (auto _ : state) {
    auto top = top_n_frequent(db, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(top.size());
  }
}
BENCHMARK(BM_TopNFrequent)->Arg(63)->Arg(1023)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
