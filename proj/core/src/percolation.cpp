#include "roadperc/percolation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "roadperc/betweenness.hpp"
#include "roadperc/error.hpp"
#include "roadperc/stats.hpp"

namespace roadperc {
namespace {

void require_percolatable(const RoadNetwork& network) {
  if (network.edge_count() == 0) throw ValidationError("network has no edges to remove");
  if (!is_connected(network)) throw ValidationError("run on GCC only: network is disconnected");
}

void require_fraction(double fraction) {
  if (!(fraction > 0.0 && fraction <= 0.5)) {
    throw ValidationError("checkpoint fraction must lie in (0, 0.5]");
  }
}

// Removals between checkpoints. The epsilon keeps exact products such as
// 0.01 * 4900 from rounding up to the next integer.
std::size_t checkpoint_step(std::size_t edge_count, double fraction) {
  const double raw = std::ceil(fraction * static_cast<double>(edge_count) - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

double fraction_removed(std::size_t removed, std::size_t edge_count) {
  return static_cast<double>(removed) / static_cast<double>(edge_count);
}

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Largest and second largest component sizes from a size histogram.
std::pair<std::size_t, std::size_t> top_two(const std::vector<std::size_t>& count_of_size,
                                            std::size_t largest) {
  if (count_of_size[largest] >= 2) return {largest, largest};
  for (std::size_t s = largest; s-- > 1;) {
    if (count_of_size[s] > 0) return {largest, s};
  }
  return {largest, 0};
}

}  // namespace

std::size_t threshold_index(std::span<const Checkpoint> curve) {
  if (curve.empty()) throw ValidationError("threshold of an empty curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].slcc_size > curve[best].slcc_size) best = i;
  }
  return best;
}

double detect_threshold(std::span<const Checkpoint> curve) { return curve[threshold_index(curve)].p; }

std::vector<EdgeId> random_edge_order(std::size_t edge_count, std::uint64_t seed) {
  std::vector<EdgeId> order(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) order[i] = edge_id(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = edge_count; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

PercolationRun run_removal_order(const RoadNetwork& network, std::vector<EdgeId> order,
                                 double checkpoint_fraction) {
  require_fraction(checkpoint_fraction);
  require_percolatable(network);
  const std::size_t n = network.node_count();
  const std::size_t m = network.edge_count();
  if (order.size() != m) throw ValidationError("removal order must cover every edge");

  const std::size_t step = checkpoint_step(m, checkpoint_fraction);
  std::vector<std::size_t> marks;  // removal counts at which sizes are recorded
  for (std::size_t r = 0; r < m; r += step) marks.push_back(r);
  marks.push_back(m);

  // Replay the removals backwards as insertions: union-find only grows.
  std::vector<std::pair<std::size_t, std::size_t>> sizes(marks.size());
  DisjointSets sets(n);
  std::vector<std::size_t> count_of_size(n + 1, 0);
  count_of_size[1] = n;
  std::size_t largest = 1;
  std::size_t next_mark = marks.size();
  for (std::size_t removed = m + 1; removed-- > 0;) {
    if (removed < m) {
      const auto& e = network.edge(order[removed]);
      const auto a = to_index(e.a);
      const auto b = to_index(e.b);
      const std::size_t sa = sets.size_of(a);
      const std::size_t sb = sets.size_of(b);
      if (sets.unite(a, b)) {
        --count_of_size[sa];
        --count_of_size[sb];
        ++count_of_size[sa + sb];
        largest = std::max(largest, sa + sb);
      }
    }
    if (next_mark > 0 && marks[next_mark - 1] == removed) {
      sizes[--next_mark] = top_two(count_of_size, largest);
    }
  }

  PercolationRun run;
  std::size_t stop = marks.size() - 1;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    run.curve.push_back({fraction_removed(marks[k], m), sizes[k].first, sizes[k].second});
    if (sizes[k].first == sizes[k].second) {
      stop = k;
      break;
    }
  }
  const std::size_t at = threshold_index(run.curve);
  run.p_c = run.curve[at].p;
  run.removed_at_threshold = marks[at];
  order.resize(marks[stop]);
  run.removed_order = std::move(order);
  return run;
}

PercolationRun run_error(const RoadNetwork& network, std::uint64_t seed, double checkpoint_fraction) {
  require_fraction(checkpoint_fraction);
  require_percolatable(network);
  PercolationRun run = run_removal_order(network, random_edge_order(network.edge_count(), seed),
                                         checkpoint_fraction);
  run.seed = seed;
  return run;
}

PercolationEnsemble run_error_ensemble(const RoadNetwork& network, std::uint64_t base_seed,
                                       const EnsembleOptions& options) {
  if (options.runs == 0) throw ValidationError("ensemble needs at least one run");
  require_fraction(options.checkpoint_fraction);
  require_percolatable(network);

  PercolationEnsemble ensemble;
  ensemble.runs.resize(options.runs);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(options.threads, 1, options.runs));
  if (workers == 1) {
    for (std::size_t i = 0; i < options.runs; ++i) {
      ensemble.runs[i] = run_error(network, base_seed + i, options.checkpoint_fraction);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = next++; i < options.runs; i = next++) {
              ensemble.runs[i] = run_error(network, base_seed + i, options.checkpoint_fraction);
            }
          } catch (...) {
            failures[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  std::vector<double> thresholds;
  std::size_t shortest = ensemble.runs.front().curve.size();
  for (const auto& run : ensemble.runs) {
    thresholds.push_back(run.p_c);
    shortest = std::min(shortest, run.curve.size());
  }
  ensemble.p_c_mean = mean(thresholds);
  ensemble.p_c_std = population_stddev(thresholds);

  const double count = static_cast<double>(ensemble.runs.size());
  for (std::size_t k = 0; k < shortest; ++k) {
    MeanCheckpoint point{ensemble.runs.front().curve[k].p, 0.0, 0.0};
    for (const auto& run : ensemble.runs) {
      point.gcc_size += static_cast<double>(run.curve[k].gcc_size);
      point.slcc_size += static_cast<double>(run.curve[k].slcc_size);
    }
    point.gcc_size /= count;
    point.slcc_size /= count;
    ensemble.mean_curve.push_back(point);
  }
  return ensemble;
}

namespace {

// Component bookkeeping under edge deletion: a split is detected by a
// breadth-first search from one endpoint of the removed edge.
class ShrinkingComponents {
 public:
  ShrinkingComponents(const RoadNetwork& network, const EdgeMask& alive)
      : network_(network), alive_(alive) {
    auto comps = label_components(network, alive);
    label_ = std::move(comps.label);
    size_of_label_ = comps.sizes;
    for (auto s : comps.sizes) ++sizes_[s];
    mark_.assign(network.node_count(), 0);
  }

  // Call after alive[e] has been cleared. Returns the labels now covering
  // the endpoints (one or two).
  std::pair<std::uint32_t, std::uint32_t> on_removed(EdgeId e) {
    const auto& edge = network_.edge(e);
    const auto a = to_index(edge.a);
    const auto b = to_index(edge.b);
    ++stamp_;
    queue_.clear();
    queue_.push_back(a);
    mark_[a] = stamp_;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId v = node_id(queue_[head]);
      for (EdgeId f : network_.incident(v)) {
        if (!alive_[to_index(f)]) continue;
        const auto w = to_index(network_.edge(f).other(v));
        if (w == b) return {label_[a], label_[a]};
        if (mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        queue_.push_back(w);
      }
    }
    // Split: a's side becomes a new component.
    const std::uint32_t old_label = label_[a];
    const auto new_label = static_cast<std::uint32_t>(size_of_label_.size());
    const std::size_t old_size = size_of_label_[old_label];
    const std::size_t part = queue_.size();
    for (auto v : queue_) label_[v] = new_label;
    size_of_label_[old_label] = old_size - part;
    size_of_label_.push_back(part);
    if (--sizes_[old_size] == 0) sizes_.erase(old_size);
    ++sizes_[old_size - part];
    ++sizes_[part];
    return {new_label, old_label};
  }

  std::pair<std::size_t, std::size_t> top_two() const {
    auto it = sizes_.begin();
    if (it == sizes_.end()) return {0, 0};
    if (it->second >= 2) return {it->first, it->first};
    auto next = std::next(it);
    return {it->first, next == sizes_.end() ? 0 : next->first};
  }

  std::uint32_t label(std::size_t v) const { return label_[v]; }
  std::size_t label_count() const { return size_of_label_.size(); }

 private:
  const RoadNetwork& network_;
  const EdgeMask& alive_;
  std::vector<std::uint32_t> label_;
  std::vector<std::size_t> size_of_label_;
  std::map<std::size_t, std::size_t, std::greater<>> sizes_;  // size -> count
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

PercolationRun run_attack(const RoadNetwork& network, std::size_t recompute_every) {
  if (recompute_every == 0) throw ValidationError("recompute_every must be at least 1");
  require_percolatable(network);
  const std::size_t n = network.node_count();
  const std::size_t m = network.edge_count();

  EdgeMask alive = all_edges(network);
  ShrinkingComponents comps(network, alive);
  std::vector<double> scores = edge_betweenness(network, alive);
  // Components touched since the last recomputation. Scores of untouched
  // components are still exact, so only dirty components are recomputed;
  // visiting their sources in ascending order reproduces a full pass exactly.
  std::vector<bool> dirty_label;
  std::size_t since_recompute = 0;

  PercolationRun run;
  run.curve.push_back({0.0, n, 0});
  for (std::size_t removed = 1; removed <= m; ++removed) {
    if (since_recompute == recompute_every) {
      std::vector<NodeId> sources;
      for (std::size_t v = 0; v < n; ++v) {
        const auto l = comps.label(v);
        if (l < dirty_label.size() && dirty_label[l]) sources.push_back(node_id(v));
      }
      for (std::size_t i = 0; i < m; ++i) {
        const auto& e = network.edge(edge_id(i));
        const auto l = comps.label(to_index(e.a));
        if (alive[i] && l < dirty_label.size() && dirty_label[l]) scores[i] = 0.0;
      }
      accumulate_edge_betweenness(network, alive, sources, scores);
      dirty_label.assign(comps.label_count(), false);
      since_recompute = 0;
    }

    std::size_t pick = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (alive[i] && (pick == m || scores[i] > scores[pick])) pick = i;
    }
    alive[pick] = 0;
    run.removed_order.push_back(edge_id(pick));
    const auto [la, lb] = comps.on_removed(edge_id(pick));
    dirty_label.resize(comps.label_count(), false);
    dirty_label[la] = true;
    dirty_label[lb] = true;
    ++since_recompute;

    const auto [gcc, slcc] = comps.top_two();
    run.curve.push_back({fraction_removed(removed, m), gcc, slcc});
    if (gcc == slcc) break;
  }

  const std::size_t at = threshold_index(run.curve);
  run.p_c = run.curve[at].p;
  run.removed_at_threshold = at;
  return run;
}

std::vector<bool> gcc_at_threshold(const RoadNetwork& network, const PercolationRun& run) {
  EdgeMask alive = all_edges(network);
  for (std::size_t i = 0; i < run.removed_at_threshold && i < run.removed_order.size(); ++i) {
    alive[to_index(run.removed_order[i])] = 0;
  }
  return giant_component_nodes(network, alive);
}

}  // namespace roadperc
