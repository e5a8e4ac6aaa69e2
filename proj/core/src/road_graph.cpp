#include "roadperc/road_graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "roadperc/components.hpp"
#include "roadperc/error.hpp"

namespace roadperc {

NodeId RoadNetwork::add_node(std::string key, GeoPoint point) {
  validate(point);
  const NodeId id = node_id(nodes_.size());
  auto [it, inserted] = by_key_.emplace(key, id);
  if (!inserted) throw ValidationError("duplicate node id \"" + key + "\"");
  nodes_.push_back({std::move(key), point});
  adjacency_.emplace_back();
  return id;
}

EdgeId RoadNetwork::add_edge(NodeId a, NodeId b, double length_km) {
  if (to_index(a) >= nodes_.size() || to_index(b) >= nodes_.size()) {
    throw ValidationError("edge endpoint out of range");
  }
  if (a == b) throw ValidationError("self-loop at node \"" + nodes_[to_index(a)].key + "\"");
  if (!std::isfinite(length_km) || length_km < 0.0) {
    throw ValidationError("edge length must be finite and non-negative");
  }
  const EdgeId id = edge_id(edges_.size());
  edges_.push_back({a, b, length_km});
  adjacency_[to_index(a)].push_back(id);
  adjacency_[to_index(b)].push_back(id);
  return id;
}

std::optional<NodeId> RoadNetwork::find(std::string_view key) const {
  auto it = by_key_.find(std::string(key));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

double RoadNetwork::total_length_km() const noexcept {
  double total = 0.0;
  for (const auto& e : edges_) total += e.length_km;
  return total;
}

std::unordered_set<std::string> identify_relevant_nodes(const std::vector<PathRecord>& paths) {
  std::unordered_set<std::string> relevant;
  // Index of the last path a node was seen in.
  std::unordered_map<std::string, std::size_t> last_path;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const auto& nodes = paths[p].nodes;
    if (nodes.empty()) continue;
    relevant.insert(nodes.front().id);
    relevant.insert(nodes.back().id);
    for (const auto& node : nodes) {
      auto [it, inserted] = last_path.emplace(node.id, p);
      if (!inserted) {
        // Seen before: either in an earlier path or earlier in this one.
        relevant.insert(node.id);
        it->second = p;
      }
    }
  }
  return relevant;
}

RoadNetwork build_edges(const std::vector<PathRecord>& paths,
                        const std::unordered_set<std::string>& relevant) {
  RoadNetwork network;
  std::unordered_map<std::string, GeoPoint> seen_points;

  auto intern = [&](const PathNode& node) {
    if (auto id = network.find(node.id)) return *id;
    return network.add_node(node.id, node.point);
  };

  for (const auto& path : paths) {
    std::optional<NodeId> from;
    double length = 0.0;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
      const PathNode& node = path.nodes[i];
      auto [it, inserted] = seen_points.emplace(node.id, node.point);
      if (!inserted && !(it->second == node.point)) {
        throw ValidationError("node \"" + node.id + "\" has conflicting coordinates");
      }
      if (i > 0) length += haversine_km(path.nodes[i - 1].point, node.point);
      if (!relevant.contains(node.id)) continue;

      const NodeId id = intern(node);
      if (from && *from != id) network.add_edge(*from, id, length);
      from = id;
      length = 0.0;
    }
  }
  return network;
}

namespace {

// Rebuilds a network from the kept nodes (ascending) and kept edges in the
// given order, re-densifying ids.
RoadNetwork compact(const RoadNetwork& source, const std::vector<bool>& keep_node,
                    const std::vector<RoadEdge>& edges, const std::vector<EdgeId>& edge_origin,
                    IdMapping* mapping) {
  RoadNetwork out;
  std::vector<NodeId> remap(source.node_count());
  IdMapping ids;
  for (std::size_t i = 0; i < source.node_count(); ++i) {
    if (!keep_node[i]) continue;
    const auto& node = source.node(node_id(i));
    remap[i] = out.add_node(node.key, node.point);
    ids.node_origin.push_back(node_id(i));
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    out.add_edge(remap[to_index(e.a)], remap[to_index(e.b)], e.length_km);
    ids.edge_origin.push_back(edge_origin[k]);
  }
  if (mapping) *mapping = std::move(ids);
  return out;
}

}  // namespace

RoadNetwork prune_degree_two(const RoadNetwork& network, IdMapping* mapping) {
  const std::size_t n = network.node_count();
  std::vector<RoadEdge> edges = network.edges();
  std::vector<bool> edge_alive(edges.size(), true);
  // Contracted edges carry no single origin; they keep the id of the first
  // of the two edges they replace.
  std::vector<EdgeId> origin;
  origin.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) origin.push_back(edge_id(i));

  std::vector<std::vector<std::uint32_t>> incident(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[to_index(edges[i].a)].push_back(static_cast<std::uint32_t>(i));
    incident[to_index(edges[i].b)].push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<bool> node_alive(n, true);

  auto live_incident = [&](std::size_t v) {
    auto& list = incident[v];
    std::erase_if(list, [&](std::uint32_t e) { return !edge_alive[e]; });
    return list;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!node_alive[v]) continue;
      auto list = live_incident(v);
      if (list.size() != 2) continue;
      std::sort(list.begin(), list.end());
      const RoadEdge first = edges[list[0]];
      const RoadEdge second = edges[list[1]];
      const NodeId u = first.other(node_id(v));
      const NodeId w = second.other(node_id(v));
      if (u == w) continue;  // would become a self-loop

      edge_alive[list[0]] = false;
      edge_alive[list[1]] = false;
      node_alive[v] = false;
      incident[v].clear();
      const auto merged = static_cast<std::uint32_t>(edges.size());
      edges.push_back({u, w, first.length_km + second.length_km});
      edge_alive.push_back(true);
      origin.push_back(origin[list[0]]);
      incident[to_index(u)].push_back(merged);
      incident[to_index(w)].push_back(merged);
      changed = true;
    }
  }

  std::vector<RoadEdge> kept;
  std::vector<EdgeId> kept_origin;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_alive[i]) continue;
    kept.push_back(edges[i]);
    kept_origin.push_back(origin[i]);
  }
  return compact(network, node_alive, kept, kept_origin, mapping);
}

RoadNetwork extract_gcc(const RoadNetwork& network, IdMapping* mapping) {
  if (network.empty()) throw ValidationError("cannot extract a giant component from an empty network");
  const std::vector<bool> keep = giant_component_nodes(network, all_edges(network));

  std::vector<RoadEdge> kept;
  std::vector<EdgeId> kept_origin;
  for (std::size_t i = 0; i < network.edge_count(); ++i) {
    const auto& e = network.edge(edge_id(i));
    if (!keep[to_index(e.a)]) continue;
    kept.push_back(e);
    kept_origin.push_back(edge_id(i));
  }
  return compact(network, keep, kept, kept_origin, mapping);
}

RoadNetwork build_road_network(const std::vector<PathRecord>& paths) {
  const auto relevant = identify_relevant_nodes(paths);
  return extract_gcc(prune_degree_two(build_edges(paths, relevant)));
}

NetworkMetrics compute_metrics(const RoadNetwork& network) {
  const std::size_t v = network.node_count();
  if (v < 3) throw ValidationError("meshness undefined for fewer than 3 nodes");
  const std::size_t e = network.edge_count();

  std::size_t organic_nodes = 0;
  for (std::size_t i = 0; i < v; ++i) {
    const std::size_t k = network.degree(node_id(i));
    if (k == 1 || k == 3) ++organic_nodes;
  }

  NetworkMetrics m;
  m.v = v;
  m.e = e;
  m.length_km = network.total_length_km();
  m.avg_degree = 2.0 * static_cast<double>(e) / static_cast<double>(v);
  m.meshness = (static_cast<double>(e) - static_cast<double>(v) + 1.0) /
               (2.0 * static_cast<double>(v) - 5.0);
  m.organic = static_cast<double>(organic_nodes) / static_cast<double>(v);
  return m;
}

}  // namespace roadperc
