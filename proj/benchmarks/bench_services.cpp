#include <random>

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "roadperc/services.hpp"

namespace {

using namespace roadperc;

void BM_AssignVenues(benchmark::State& state) {
  const std::size_t side = 100;
  const auto net = bench::grid_network(side);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-0.01, 0.001 * side + 0.01);
  std::vector<VenueRecord> venues;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    venues.push_back({"v" + std::to_string(i), kAllCategories[static_cast<std::size_t>(i) % kCategoryCount],
                      {coord(rng), coord(rng)}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(assign_venues(net, venues).assigned.size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AssignVenues)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
