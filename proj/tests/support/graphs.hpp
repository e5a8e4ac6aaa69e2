#pragma once

// Test fixtures and independent oracles. Nothing here calls into the
// percolation or betweenness implementations it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "roadperc/components.hpp"
#include "roadperc/records.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc::testing {

// Nodes "n0".."n{k-1}" laid out on a 0.001-degree grid along the equator.
inline RoadNetwork network_from_edges(std::size_t nodes,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RoadNetwork net;
  for (std::size_t i = 0; i < nodes; ++i) {
    net.add_node("n" + std::to_string(i),
                 {0.001 * static_cast<double>(i % 100), 0.001 * static_cast<double>(i / 100)});
  }
  for (auto [a, b] : edges) net.add_edge(node_id(a), node_id(b), 1.0);
  return net;
}

inline RoadNetwork path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return network_from_edges(n, edges);
}

inline RoadNetwork ring_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return network_from_edges(n, edges);
}

inline RoadNetwork star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return network_from_edges(leaves + 1, edges);
}

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3 (7 edges).
inline RoadNetwork barbell_graph() {
  return network_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

// width x height square lattice, row-major node ids.
inline RoadNetwork grid_graph(std::size_t width, std::size_t height) {
  RoadNetwork net;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      net.add_node("g" + std::to_string(x) + "_" + std::to_string(y),
                   {0.001 * static_cast<double>(x), 0.001 * static_cast<double>(y)});
    }
  }
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const std::size_t v = y * width + x;
      if (x + 1 < width) net.add_edge(node_id(v), node_id(v + 1), 0.111);
      if (y + 1 < height) net.add_edge(node_id(v), node_id(v + width), 0.111);
    }
  }
  return net;
}

// Random labelled tree by attaching node i to a uniform earlier node.
inline RoadNetwork random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  }
  return network_from_edges(n, edges);
}

// Connected multigraph: a random spanning tree plus `extra` random edges
// (parallel edges allowed, no self-loops).
inline RoadNetwork random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (extra > 0 && n > 1) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a == b) continue;
    edges.emplace_back(a, b);
    --extra;
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return network_from_edges(n, edges);
}

// Random simple graph, possibly disconnected.
inline RoadNetwork random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return network_from_edges(n, edges);
}

// Plain BFS component sizes, descending.
inline std::vector<std::size_t> bfs_component_sizes(const RoadNetwork& net, const EdgeMask& alive) {
  const std::size_t n = net.node_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (!alive[i]) continue;
    const auto& e = net.edge(edge_id(i));
    adj[to_index(e.a)].push_back(to_index(e.b));
    adj[to_index(e.b)].push_back(to_index(e.a));
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++count;
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Edge betweenness by explicit enumeration of every shortest path, as a
// sequence of edge ids, between every ordered pair of nodes.
inline std::vector<double> brute_force_edge_betweenness(const RoadNetwork& net, const EdgeMask& alive) {
  const std::size_t n = net.node_count();
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  // All-pairs hop distances by Floyd-Warshall.
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    if (!alive[i]) continue;
    const auto& e = net.edge(edge_id(i));
    dist[to_index(e.a)][to_index(e.b)] = 1;
    dist[to_index(e.b)][to_index(e.a)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dist[i][k] != kInf && dist[k][j] != kInf && dist[i][k] + dist[k][j] < dist[i][j])
          dist[i][j] = dist[i][k] + dist[k][j];

  std::vector<double> score(net.edge_count(), 0.0);
  std::vector<std::size_t> trail;
  std::vector<std::vector<std::size_t>> found;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t || dist[s][t] == kInf) continue;
      found.clear();
      // Depth-first walk that only steps one hop closer to t.
      auto walk = [&](auto&& self, std::size_t v) -> void {
        if (v == t) {
          found.push_back(trail);
          return;
        }
        for (std::size_t i = 0; i < net.edge_count(); ++i) {
          if (!alive[i]) continue;
          const auto& e = net.edge(edge_id(i));
          std::size_t w;
          if (to_index(e.a) == v) {
            w = to_index(e.b);
          } else if (to_index(e.b) == v) {
            w = to_index(e.a);
          } else {
            continue;
          }
          if (dist[w][t] + 1 != dist[v][t]) continue;
          trail.push_back(i);
          self(self, w);
          trail.pop_back();
        }
      };
      walk(walk, s);
      const double total = static_cast<double>(found.size());
      for (const auto& path : found)
        for (auto e : path) score[e] += 1.0 / total;
    }
  }
  return score;
}

// Three-road builder example used throughout: nine map nodes, six
// of them relevant, node 4 contracted in the pruning step.
//   road A: 1 - 2 - 4          (4 is an end of A and of B)
//   road B: 4 - 5 - 6 - 3      (6 is crossed by C)
//   road C: 7 - 8 - 6 - 9
inline std::vector<PathRecord> three_roads() {
  auto node = [](int id, double lon, double lat) {
    return PathNode{std::to_string(id), {lon, lat}};
  };
  return {
      {"A", {node(1, 0.000, 0.000), node(2, 0.001, 0.000), node(4, 0.002, 0.000)}},
      {"B", {node(4, 0.002, 0.000), node(5, 0.003, 0.000), node(6, 0.004, 0.000),
             node(3, 0.005, 0.000)}},
      {"C", {node(7, 0.004, 0.002), node(8, 0.004, 0.001), node(6, 0.004, 0.000),
             node(9, 0.004, -0.001)}},
  };
}

}  // namespace roadperc::testing
