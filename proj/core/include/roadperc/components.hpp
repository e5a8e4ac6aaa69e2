#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "roadperc/road_graph.hpp"

namespace roadperc {

// One flag per edge; nonzero means the edge is present.
using EdgeMask = std::vector<std::uint8_t>;

inline EdgeMask all_edges(const RoadNetwork& network) {
  return EdgeMask(network.edge_count(), 1);
}

// Union by size with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::uint32_t find(std::uint32_t x) noexcept;
  // Returns false when a and b were already joined.
  bool unite(std::uint32_t a, std::uint32_t b) noexcept;
  std::size_t size_of(std::uint32_t x) noexcept { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

struct ComponentLabels {
  std::vector<std::uint32_t> label;  // per node, numbered by smallest member
  std::vector<std::size_t> sizes;    // per label
};

// Connected components of (all nodes, alive edges) by breadth-first search.
ComponentLabels label_components(const RoadNetwork& network, const EdgeMask& alive);

// Component node counts in descending order; they sum to node_count().
std::vector<std::size_t> component_sizes(const RoadNetwork& network, const EdgeMask& alive);

// Node membership of the largest component of (nodes, alive edges); ties go
// to the component holding the smallest NodeId.
std::vector<bool> giant_component_nodes(const RoadNetwork& network, const EdgeMask& alive);

bool is_connected(const RoadNetwork& network);

}  // namespace roadperc
