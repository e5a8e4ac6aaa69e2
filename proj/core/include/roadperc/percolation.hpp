#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "roadperc/components.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc {

struct Checkpoint {
  double p = 0.0;              // fraction of the original edges removed
  std::size_t gcc_size = 0;    // nodes in the largest component
  std::size_t slcc_size = 0;   // nodes in the second largest, 0 if none

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Ensemble average of the run curves at one checkpoint.
struct MeanCheckpoint {
  double p = 0.0;
  double gcc_size = 0.0;
  double slcc_size = 0.0;

  friend bool operator==(const MeanCheckpoint&, const MeanCheckpoint&) = default;
};

struct PercolationRun {
  std::vector<Checkpoint> curve;   // starts at p = 0
  double p_c = 0.0;
  std::size_t removed_at_threshold = 0;
  std::optional<std::uint64_t> seed;  // Error runs only
  std::vector<EdgeId> removed_order;  // every removal up to the stop point
};

struct PercolationEnsemble {
  std::vector<PercolationRun> runs;
  double p_c_mean = 0.0;
  double p_c_std = 0.0;  // population standard deviation
  std::vector<MeanCheckpoint> mean_curve;  // truncated to the shortest run
};

// Index of the checkpoint with the largest SLCC, earliest on ties.
// Throws ValidationError on an empty curve.
std::size_t threshold_index(std::span<const Checkpoint> curve);
double detect_threshold(std::span<const Checkpoint> curve);

// Portable Fisher-Yates over mt19937_64; identical on every platform.
std::vector<EdgeId> random_edge_order(std::size_t edge_count, std::uint64_t seed);

// Random failure: edges removed in a seeded uniform permutation, component
// sizes recorded every ceil(fraction * E) removals and after the last one.
// Stops at the first checkpoint with gcc_size == slcc_size.
// Throws ValidationError when the network is disconnected or edgeless, or
// the fraction is outside (0, 0.5].
PercolationRun run_error(const RoadNetwork& network, std::uint64_t seed,
                         double checkpoint_fraction = 0.01);

// Same process for an explicit removal order (a permutation of all edges).
PercolationRun run_removal_order(const RoadNetwork& network, std::vector<EdgeId> order,
                                 double checkpoint_fraction);

struct EnsembleOptions {
  std::size_t runs = 50;
  double checkpoint_fraction = 0.01;
  unsigned threads = 1;  // results do not depend on this
};

// Run i uses seed base_seed + i.
PercolationEnsemble run_error_ensemble(const RoadNetwork& network, std::uint64_t base_seed,
                                       const EnsembleOptions& options = {});

// Targeted attack: repeatedly removes the alive edge of highest betweenness
// (smallest EdgeId on ties), recomputing scores every `recompute_every`
// removals, and records component sizes after every removal.
PercolationRun run_attack(const RoadNetwork& network, std::size_t recompute_every = 1);

// Node membership of the giant component at the run's threshold.
std::vector<bool> gcc_at_threshold(const RoadNetwork& network, const PercolationRun& run);

}  // namespace roadperc
