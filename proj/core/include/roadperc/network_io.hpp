#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "roadperc/road_graph.hpp"

namespace roadperc {

// Node table "node_id,lon,lat" and edge list "edge_id,node_a,node_b,length_km".
// Nodes are written in id order under their original keys, so reading the
// pair back reproduces the network exactly, ids included.
void write_nodes_csv(std::ostream& out, const RoadNetwork& network);
void write_edges_csv(std::ostream& out, const RoadNetwork& network);

RoadNetwork read_network(std::istream& nodes_csv, std::istream& edges_csv);
RoadNetwork read_network_files(const std::filesystem::path& nodes_file,
                               const std::filesystem::path& edges_file);

}  // namespace roadperc
