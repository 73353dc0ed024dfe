#include <benchmark/benchmark.h>

#include "girthlift/families.hpp"
#include "girthlift/walk_analysis.hpp"

using namespace girthlift;

namespace {

NamedGraph which(std::int64_t i) { return static_cast<NamedGraph>(i); }

void BM_Girth(benchmark::State& state) {
  const Graph g = make(family::Named{which(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
  state.SetLabel(std::string(name(which(state.range(0)))));
}
BENCHMARK(BM_Girth)->DenseRange(0, 5);

void BM_FiberDistances(benchmark::State& state) {
  const Graph g = make(family::Named{which(state.range(0))});
  const auto lg = build_lift(g, spanning_tree(g));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_distances(lg));
  state.SetLabel(std::to_string(lg.num_vertices()) + " lifted vertices");
}
BENCHMARK(BM_FiberDistances)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Embed(benchmark::State& state) {
  const Graph g = make(family::Named{which(state.range(0))});
  const auto lg = build_lift(g, spanning_tree(g));
  for (auto _ : state) benchmark::DoNotOptimize(embed(lg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lg.num_vertices()));
}
BENCHMARK(BM_Embed)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const Graph g = make(family::Named{NamedGraph::heawood});
  const auto lg = build_lift(g, spanning_tree(g));
  const auto fd = fiber_distances(lg);
  const auto t = embed(lg);
  const LemmaContext ctx{lg, fd, t, 6, 3};
  const auto pairs = sampled_pairs(lg, fd, static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(ctx, pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_Sweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
