#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "roadperc/betweenness.hpp"
#include "roadperc/components.hpp"
#include "roadperc/percolation.hpp"

namespace {

using namespace roadperc;

void BM_EdgeBetweenness(benchmark::State& state) {
  const auto net = bench::grid_network(static_cast<std::size_t>(state.range(0)));
  const auto alive = all_edges(net);
  for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness(net, alive));
}
BENCHMARK(BM_EdgeBetweenness)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_RunError(benchmark::State& state) {
  const auto net = bench::grid_network(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_error(net, seed++, 0.01).p_c);
}
BENCHMARK(BM_RunError)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RunAttack(benchmark::State& state) {
  const auto net = bench::grid_network(static_cast<std::size_t>(state.range(0)));
  const auto every = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_attack(net, every).p_c);
}
BENCHMARK(BM_RunAttack)->Args({30, 1})->Args({50, 1})->Args({50, 10})->Unit(benchmark::kMillisecond);

}  // namespace
