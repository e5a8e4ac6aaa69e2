#include "roadperc/components.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace roadperc {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t a, std::uint32_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

ComponentLabels label_components(const RoadNetwork& network, const EdgeMask& alive) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = network.node_count();
  ComponentLabels out;
  out.label.assign(n, kUnset);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (out.label[start] != kUnset) continue;
    const auto label = static_cast<std::uint32_t>(out.sizes.size());
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(start));
    out.label[start] = label;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = node_id(queue[head]);
      for (EdgeId e : network.incident(v)) {
        if (!alive[to_index(e)]) continue;
        const auto w = to_index(network.edge(e).other(v));
        if (out.label[w] != kUnset) continue;
        out.label[w] = label;
        queue.push_back(w);
      }
    }
    out.sizes.push_back(queue.size());
  }
  return out;
}

std::vector<std::size_t> component_sizes(const RoadNetwork& network, const EdgeMask& alive) {
  auto sizes = label_components(network, alive).sizes;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::vector<bool> giant_component_nodes(const RoadNetwork& network, const EdgeMask& alive) {
  const auto comps = label_components(network, alive);
  std::vector<bool> member(network.node_count(), false);
  if (comps.sizes.empty()) return member;
  // Labels are numbered by smallest member, so the first maximum wins ties.
  const auto giant = static_cast<std::uint32_t>(
      std::max_element(comps.sizes.begin(), comps.sizes.end()) - comps.sizes.begin());
  for (std::size_t i = 0; i < member.size(); ++i) member[i] = comps.label[i] == giant;
  return member;
}

bool is_connected(const RoadNetwork& network) {
  return label_components(network, all_edges(network)).sizes.size() == 1;
}

}  // namespace roadperc
