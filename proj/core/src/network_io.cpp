#include "roadperc/network_io.hpp"

#include <fstream>
#include <string>

#include "roadperc/error.hpp"
#include "roadperc/io.hpp"

namespace roadperc {
namespace {

std::vector<std::vector<std::string>> read_table(std::istream& in, std::string_view header,
                                                 std::size_t columns) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != header) throw ParseError(1, "expected header \"" + std::string(header) + "\"");
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_csv_line(line, line_no);
    if (fields.size() != columns) {
      throw ParseError(line_no, "expected " + std::to_string(columns) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  if (line_no == 0) throw ParseError(1, "empty file");
  return rows;
}

}  // namespace

void write_nodes_csv(std::ostream& out, const RoadNetwork& network) {
  out << "node_id,lon,lat\n";
  for (const auto& node : network.nodes()) {
    out << csv_field(node.key) << ',' << format_roundtrip(node.point.lon) << ','
        << format_roundtrip(node.point.lat) << '\n';
  }
}

void write_edges_csv(std::ostream& out, const RoadNetwork& network) {
  out << "edge_id,node_a,node_b,length_km\n";
  for (std::size_t i = 0; i < network.edge_count(); ++i) {
    const auto& e = network.edge(edge_id(i));
    out << i << ',' << csv_field(network.node(e.a).key) << ',' << csv_field(network.node(e.b).key)
        << ',' << format_roundtrip(e.length_km) << '\n';
  }
}

RoadNetwork read_network(std::istream& nodes_csv, std::istream& edges_csv) {
  RoadNetwork network;
  for (const auto& row : read_table(nodes_csv, "node_id,lon,lat", 3)) {
    network.add_node(row[0], {parse_double(row[1]), parse_double(row[2])});
  }
  std::size_t expected_id = 0;
  for (const auto& row : read_table(edges_csv, "edge_id,node_a,node_b,length_km", 4)) {
    if (row[0] != std::to_string(expected_id)) {
      throw ValidationError("edge ids must be dense and ascending; got \"" + row[0] + "\"");
    }
    ++expected_id;
    auto a = network.find(row[1]);
    auto b = network.find(row[2]);
    if (!a || !b) throw ValidationError("edge " + row[0] + " references an unknown node");
    network.add_edge(*a, *b, parse_double(row[3]));
  }
  return network;
}

RoadNetwork read_network_files(const std::filesystem::path& nodes_file,
                               const std::filesystem::path& edges_file) {
  std::ifstream nodes(nodes_file, std::ios::binary);
  if (!nodes) throw ValidationError("cannot open " + nodes_file.string());
  std::ifstream edges(edges_file, std::ios::binary);
  if (!edges) throw ValidationError("cannot open " + edges_file.string());
  return read_network(nodes, edges);
}

}  // namespace roadperc
