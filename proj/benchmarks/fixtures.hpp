#pragma once

#include <string>
#include <vector>

#include "roadperc/records.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc::bench {

inline std::string grid_key(std::size_t x, std::size_t y) {
  return std::to_string(x) + "_" + std::to_string(y);
}

inline GeoPoint grid_point(std::size_t x, std::size_t y) {
  return {0.001 * static_cast<double>(x), 0.001 * static_cast<double>(y)};
}

// side x side square lattice with 0.001-degree spacing.
inline RoadNetwork grid_network(std::size_t side) {
  RoadNetwork net;
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) net.add_node(grid_key(x, y), grid_point(x, y));
  for (std::size_t y = 0; y < side; ++y) {
    for (std::size_t x = 0; x < side; ++x) {
      const std::size_t v = y * side + x;
      if (x + 1 < side) net.add_edge(node_id(v), node_id(v + 1), 0.111);
      if (y + 1 < side) net.add_edge(node_id(v), node_id(v + side), 0.111);
    }
  }
  return net;
}

// The same lattice as raw map paths, with an unshared midpoint on every
// block so the builder has something to contract.
inline std::vector<PathRecord> grid_paths(std::size_t side) {
  std::vector<PathRecord> paths;
  for (int axis = 0; axis < 2; ++axis) {
    for (std::size_t i = 0; i < side; ++i) {
      PathRecord path{(axis ? "col" : "row") + std::to_string(i), {}};
      for (std::size_t j = 0; j < side; ++j) {
        const std::size_t x = axis ? i : j;
        const std::size_t y = axis ? j : i;
        if (j > 0) {
          const GeoPoint a = axis ? grid_point(x, y - 1) : grid_point(x - 1, y);
          const GeoPoint b = grid_point(x, y);
          path.nodes.push_back({"m" + std::to_string(axis) + "_" + grid_key(x, y),
                                {(a.lon + b.lon) / 2, (a.lat + b.lat) / 2}});
        }
        path.nodes.push_back({grid_key(x, y), grid_point(x, y)});
      }
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

}  // namespace roadperc::bench
