#include <benchmark/benchmark.h>

#include "lgsep/generate.hpp"
#include "lgsep/oracles.hpp"
#include "lgsep/partition.hpp"

using namespace lgsep;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

Graph disjoint_grids(std::int32_t copies, std::int32_t k) {
  const Graph one = generate({Family::grid, k, k, 0});
  std::vector<Edge> e;
  for (std::int32_t c = 0; c < copies; ++c)
    for (const auto& x : one.edges()) e.push_back({x.u + c * one.num_vertices(), x.v + c * one.num_vertices()});
  return Graph(copies * one.num_vertices(), std::move(e));
}

void bm_treewidth(benchmark::State& state) {
  const Graph g = generate({Family::grid, 3, 4, 0});
  OracleLimits limits;
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g, limits, mode(state)));
}

void bm_min_separator(benchmark::State& state) {
  const Graph g = generate({Family::grid, 3, 4, 0});
  const auto w = WeightFunction::uniform(g.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(min_balanced_edge_separator(g, w, {}, mode(state)));
}

void bm_isoperimetric(benchmark::State& state) {
  const Graph g = generate({Family::grid, 4, 4, 0});
  for (auto _ : state) benchmark::DoNotOptimize(exact_isoperimetric(g, {}, mode(state)));
}

void bm_validate_partition(benchmark::State& state) {
  const Graph g = generate({Family::grid, 40, 40, 0});
  auto res = partition_line_graph(g, 5);
  const auto& p = std::get<LineGraphPartition>(res);
  for (auto _ : state) benchmark::DoNotOptimize(validate_partition(g, p.partition, p.params, mode(state)));
}

void bm_partition_components(benchmark::State& state) {
  const Graph g = disjoint_grids(16, 12);
  EngineOptions options;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(partition_line_graph(g, 5, options));
}

}  // namespace

BENCHMARK(bm_treewidth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_min_separator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_isoperimetric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_validate_partition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_partition_components)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
