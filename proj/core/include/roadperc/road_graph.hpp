#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "roadperc/geo.hpp"
#include "roadperc/records.hpp"

namespace roadperc {

enum class NodeId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t to_index(NodeId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t to_index(EdgeId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr NodeId node_id(std::size_t i) noexcept { return static_cast<NodeId>(i); }
constexpr EdgeId edge_id(std::size_t i) noexcept { return static_cast<EdgeId>(i); }

struct RoadNode {
  std::string key;  // original map id
  GeoPoint point;
};

struct RoadEdge {
  NodeId a{};
  NodeId b{};
  double length_km = 0.0;

  NodeId other(NodeId end) const noexcept { return end == a ? b : a; }
};

// Undirected multigraph of intersections and road segments. Parallel edges
// are allowed, self-loops are not. Ids are dense and assigned in insertion
// order; the key -> NodeId lookup is bijective.
class RoadNetwork {
 public:
  // Throws ValidationError on a duplicate key or invalid point.
  NodeId add_node(std::string key, GeoPoint point);

  // Throws ValidationError on self-loops, unknown endpoints, or a negative /
  // non-finite length.
  EdgeId add_edge(NodeId a, NodeId b, double length_km);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const RoadNode& node(NodeId id) const { return nodes_[to_index(id)]; }
  const RoadEdge& edge(EdgeId id) const { return edges_[to_index(id)]; }
  const std::vector<RoadNode>& nodes() const noexcept { return nodes_; }
  const std::vector<RoadEdge>& edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(NodeId id) const { return adjacency_[to_index(id)]; }
  std::size_t degree(NodeId id) const { return adjacency_[to_index(id)].size(); }

  std::optional<NodeId> find(std::string_view key) const;

  double total_length_km() const noexcept;

 private:
  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::unordered_map<std::string, NodeId> by_key_;
};

// Original ids of the nodes/edges of a derived network, indexed by new id.
struct IdMapping {
  std::vector<NodeId> node_origin;
  std::vector<EdgeId> edge_origin;
};

// Endpoints of every path, plus every node that belongs to more than one
// path or appears twice within the same path.
std::unordered_set<std::string> identify_relevant_nodes(const std::vector<PathRecord>& paths);

// One edge per consecutive pair of relevant nodes along each path, with the
// length of the intermediate polyline. Node ids follow first appearance of
// relevant nodes in path order. Segments that start and end on the same
// relevant node would be self-loops and are dropped.
RoadNetwork build_edges(const std::vector<PathRecord>& paths,
                        const std::unordered_set<std::string>& relevant);

// Contracts degree-2 nodes into a single through edge whose length is the sum
// of the two, sweeping nodes in ascending id order until a fixed point.
// A node whose two edges reach the same neighbour is kept, since contracting
// it would produce a self-loop.
RoadNetwork prune_degree_two(const RoadNetwork& network, IdMapping* mapping = nullptr);

// Largest connected component by node count; ties go to the component that
// contains the smallest NodeId. Throws ValidationError on an empty network.
RoadNetwork extract_gcc(const RoadNetwork& network, IdMapping* mapping = nullptr);

// The full builder: relevant nodes, edges, pruning, giant component.
RoadNetwork build_road_network(const std::vector<PathRecord>& paths);

struct NetworkMetrics {
  std::size_t v = 0;
  std::size_t e = 0;
  double length_km = 0.0;
  double avg_degree = 0.0;
  double meshness = 0.0;
  double organic = 0.0;

  friend bool operator==(const NetworkMetrics&, const NetworkMetrics&) = default;
};

// meshness = (E - V + 1) / (2V - 5), organic = (#deg1 + #deg3) / V.
// Degrees are multigraph degrees. Throws ValidationError when V < 3.
NetworkMetrics compute_metrics(const RoadNetwork& network);

}  // namespace roadperc
