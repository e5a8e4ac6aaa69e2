#pragma once

#include <span>
#include <vector>

#include "roadperc/components.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc {

// Unweighted (hop-count) shortest-path edge betweenness over ordered node
// pairs: for every edge, the sum over (s, t), s != t, of the fraction of s-t
// shortest paths that traverse it. Removed edges score 0. Parallel edges are
// distinct paths, so they split their node pair's share equally.
std::vector<double> edge_betweenness(const RoadNetwork& network, const EdgeMask& alive);

// Brandes accumulation restricted to the given sources, added into `scores`.
// Summing over every node as a source reproduces edge_betweenness exactly
// when sources are visited in ascending order.
void accumulate_edge_betweenness(const RoadNetwork& network, const EdgeMask& alive,
                                 std::span<const NodeId> sources, std::span<double> scores);

}  // namespace roadperc
