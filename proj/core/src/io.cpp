#include "roadperc/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

#include <json.hpp>

#include "roadperc/error.hpp"
#include "roadperc/percolation.hpp"

namespace roadperc {
namespace {

using nlohmann::json;

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

const json& require(const json& object, const char* key, std::size_t line_no) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(line_no, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json& object, const char* key, std::size_t line_no) {
  const json& value = require(object, key, line_no);
  if (!value.is_string()) {
    throw ParseError(line_no, std::string("field \"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

double require_number(const json& object, const char* key, std::size_t line_no) {
  const json& value = require(object, key, line_no);
  if (!value.is_number()) {
    throw ParseError(line_no, std::string("field \"") + key + "\" must be a number");
  }
  return value.get<double>();
}

template <typename Fn>
auto with_line(std::size_t line_no, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + file.string());
  return in;
}

}  // namespace

void validate(const PathRecord& path) {
  if (path.nodes.size() < 2) {
    throw ValidationError("path \"" + path.path_id + "\": path needs >=2 nodes");
  }
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    validate(path.nodes[i].point);
    if (i > 0 && path.nodes[i].id == path.nodes[i - 1].id) {
      throw ValidationError("path \"" + path.path_id + "\": node \"" + path.nodes[i].id +
                            "\" repeated consecutively");
    }
  }
}

std::vector<PathRecord> parse_paths(std::istream& in) {
  std::vector<PathRecord> paths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;

    json record;
    try {
      record = json::parse(chomp(line));
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) throw ParseError(line_no, "expected a JSON object");

    PathRecord path;
    path.path_id = require_string(record, "path_id", line_no);
    const json& nodes = require(record, "nodes", line_no);
    if (!nodes.is_array()) throw ParseError(line_no, "field \"nodes\" must be an array");
    path.nodes.reserve(nodes.size());
    for (const json& node : nodes) {
      if (!node.is_object()) throw ParseError(line_no, "path node must be an object");
      path.nodes.push_back({require_string(node, "id", line_no),
                            {require_number(node, "lon", line_no),
                             require_number(node, "lat", line_no)}});
    }
    with_line(line_no, [&] { validate(path); });
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<PathRecord> read_paths_file(const std::filesystem::path& file) {
  auto in = open_input(file);
  return parse_paths(in);
}

std::vector<VenueRecord> parse_venues(std::istream& in) {
  std::vector<VenueRecord> venues;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto fields = split_csv_line(chomp(line), line_no);
    if (header) {
      header = false;
      if (fields == std::vector<std::string>{"venue_id", "category", "lat", "lon"}) continue;
      throw ParseError(line_no, "expected header \"venue_id,category,lat,lon\"");
    }
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    }

    VenueRecord venue;
    venue.venue_id = fields[0];
    auto category = parse_category(fields[1]);
    if (!category) throw ParseError(line_no, "unknown category \"" + fields[1] + "\"");
    venue.category = *category;
    try {
      venue.point.lat = parse_double(fields[2]);
      venue.point.lon = parse_double(fields[3]);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    with_line(line_no, [&] { validate(venue.point); });
    if (!seen.insert(venue.venue_id).second) {
      throw ParseError(line_no, "duplicate venue_id \"" + venue.venue_id + "\"");
    }
    venues.push_back(std::move(venue));
  }
  if (header) throw ParseError(line_no, "missing header \"venue_id,category,lat,lon\"");
  return venues;
}

std::vector<VenueRecord> read_venues_file(const std::filesystem::path& file) {
  auto in = open_input(file);
  return parse_venues(in);
}

void write_paths(std::ostream& out, const std::vector<PathRecord>& paths) {
  for (const auto& path : paths) {
    json nodes = json::array();
    for (const auto& node : path.nodes) {
      nodes.push_back({{"id", node.id}, {"lon", node.point.lon}, {"lat", node.point.lat}});
    }
    out << json{{"path_id", path.path_id}, {"nodes", std::move(nodes)}}.dump() << '\n';
  }
}

void write_venues(std::ostream& out, const std::vector<VenueRecord>& venues) {
  out << "venue_id,category,lat,lon\n";
  for (const auto& v : venues) {
    out << csv_field(v.venue_id) << ',' << csv_field(label(v.category)) << ','
        << format_roundtrip(v.point.lat) << ',' << format_roundtrip(v.point.lon) << '\n';
  }
}

void write_curve_csv(std::ostream& out, const std::vector<Checkpoint>& curve) {
  out << "p,gcc_size,slcc_size\n";
  for (const auto& c : curve) {
    out << format_fixed6(c.p) << ',' << c.gcc_size << ',' << c.slcc_size << '\n';
  }
}

void write_curve_csv(std::ostream& out, const std::vector<MeanCheckpoint>& curve) {
  out << "p,gcc_size,slcc_size\n";
  for (const auto& c : curve) {
    out << format_fixed6(c.p) << ',' << format_fixed6(c.gcc_size) << ','
        << format_fixed6(c.slcc_size) << '\n';
  }
}

std::vector<Checkpoint> parse_curve_csv(std::istream& in) {
  std::vector<Checkpoint> curve;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (chomp(line) != "p,gcc_size,slcc_size") throw ParseError(1, "bad curve header");
      continue;
    }
    if (is_blank(line)) continue;
    auto fields = split_csv_line(chomp(line), line_no);
    if (fields.size() != 3) throw ParseError(line_no, "expected 3 fields");
    try {
      curve.push_back({parse_double(fields[0]),
                       static_cast<std::size_t>(std::stoull(fields[1])),
                       static_cast<std::size_t>(std::stoull(fields[2]))});
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad curve row");
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return curve;
}

void write_runs_csv(std::ostream& out, const std::vector<double>& thresholds) {
  out << "run_index,p_c\n";
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    out << i << ',' << format_fixed6(thresholds[i]) << '\n';
  }
}

std::string format_fixed6(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  if (ec != std::errc{}) throw std::runtime_error("cannot format value");
  return std::string(buf, end);
}

std::string format_roundtrip(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format value");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ValidationError("malformed number \"" + std::string(text) + "\"");
  }
  return value;
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  while (true) {
    field.clear();
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (true) {
        if (i >= line.size()) throw ParseError(line_no, "unterminated quoted field");
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += line[i++];
      }
      if (i < line.size() && line[i] != ',') throw ParseError(line_no, "text after quoted field");
    } else {
      while (i < line.size() && line[i] != ',') field += line[i++];
    }
    fields.push_back(field);
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return fields;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_file_atomic(const std::filesystem::path& file, std::string_view content) {
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, file);
}

std::string read_file(const std::filesystem::path& file) {
  auto in = open_input(file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace roadperc
