#include "roadperc/betweenness.hpp"

#include <cstdint>

namespace roadperc {
namespace {

// Alive-edge adjacency in compressed rows.
struct Arcs {
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> target;
  std::vector<std::uint32_t> edge;
};

Arcs build_arcs(const RoadNetwork& network, const EdgeMask& alive) {
  const std::size_t n = network.node_count();
  Arcs arcs;
  arcs.offset.assign(n + 1, 0);
  for (std::size_t i = 0; i < network.edge_count(); ++i) {
    if (!alive[i]) continue;
    const auto& e = network.edge(edge_id(i));
    ++arcs.offset[to_index(e.a) + 1];
    ++arcs.offset[to_index(e.b) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) arcs.offset[v + 1] += arcs.offset[v];
  arcs.target.resize(arcs.offset[n]);
  arcs.edge.resize(arcs.offset[n]);
  std::vector<std::uint32_t> fill(arcs.offset.begin(), arcs.offset.end() - 1);
  // Edge order within a row follows EdgeId, as in RoadNetwork::incident.
  for (std::size_t i = 0; i < network.edge_count(); ++i) {
    if (!alive[i]) continue;
    const auto& e = network.edge(edge_id(i));
    const auto a = to_index(e.a);
    const auto b = to_index(e.b);
    arcs.target[fill[a]] = b;
    arcs.edge[fill[a]++] = static_cast<std::uint32_t>(i);
    arcs.target[fill[b]] = a;
    arcs.edge[fill[b]++] = static_cast<std::uint32_t>(i);
  }
  return arcs;
}

}  // namespace

void accumulate_edge_betweenness(const RoadNetwork& network, const EdgeMask& alive,
                                 std::span<const NodeId> sources, std::span<double> scores) {
  const std::size_t n = network.node_count();
  const Arcs arcs = build_arcs(network, alive);

  std::vector<std::int32_t> dist(n, -1);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<std::uint32_t> order;  // BFS order; reversed it is Brandes' stack
  order.reserve(n);

  for (NodeId source : sources) {
    const auto s = to_index(source);
    order.clear();
    order.push_back(s);
    dist[s] = 0;
    sigma[s] = 1.0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto v = order[head];
      for (auto k = arcs.offset[v]; k < arcs.offset[v + 1]; ++k) {
        const auto w = arcs.target[k];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      const auto w = order[i];
      for (auto k = arcs.offset[w]; k < arcs.offset[w + 1]; ++k) {
        const auto v = arcs.target[k];
        if (dist[v] != dist[w] - 1) continue;
        const double share = sigma[v] / sigma[w] * (1.0 + delta[w]);
        scores[arcs.edge[k]] += share;
        delta[v] += share;
      }
    }

    for (auto v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }
}

std::vector<double> edge_betweenness(const RoadNetwork& network, const EdgeMask& alive) {
  std::vector<double> scores(network.edge_count(), 0.0);
  std::vector<NodeId> sources;
  sources.reserve(network.node_count());
  for (std::size_t v = 0; v < network.node_count(); ++v) sources.push_back(node_id(v));
  accumulate_edge_betweenness(network, alive, sources, scores);
  return scores;
}

}  // namespace roadperc
