#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "roadperc/road_graph.hpp"

namespace {

using namespace roadperc;

void BM_BuildRoadNetwork(benchmark::State& state) {
  const auto paths = bench::grid_paths(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto net = build_road_network(paths);
    benchmark::DoNotOptimize(net.edge_count());
  }
}
BENCHMARK(BM_BuildRoadNetwork)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ComputeMetrics(benchmark::State& state) {
  const auto net = bench::grid_network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_metrics(net));
}
BENCHMARK(BM_ComputeMetrics)->Arg(50)->Arg(200);

}  // namespace
