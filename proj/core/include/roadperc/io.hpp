#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "roadperc/records.hpp"

namespace roadperc {

struct Checkpoint;
struct MeanCheckpoint;

// Newline-delimited JSON, one path per line:
//   {"path_id": "p1", "nodes": [{"id": "a", "lon": 0.0, "lat": 0.0}, ...]}
// Blank lines are ignored. Throws ParseError / ValidationError.
std::vector<PathRecord> parse_paths(std::istream& in);
std::vector<PathRecord> read_paths_file(const std::filesystem::path& file);

// CSV with header "venue_id,category,lat,lon".
std::vector<VenueRecord> parse_venues(std::istream& in);
std::vector<VenueRecord> read_venues_file(const std::filesystem::path& file);

void write_paths(std::ostream& out, const std::vector<PathRecord>& paths);
void write_venues(std::ostream& out, const std::vector<VenueRecord>& venues);

// "p,gcc_size,slcc_size"; p with 6 decimals. Single runs print integer
// sizes, ensemble means print sizes with 6 decimals.
void write_curve_csv(std::ostream& out, const std::vector<Checkpoint>& curve);
void write_curve_csv(std::ostream& out, const std::vector<MeanCheckpoint>& curve);
std::vector<Checkpoint> parse_curve_csv(std::istream& in);

// "run_index,p_c"
void write_runs_csv(std::ostream& out, const std::vector<double>& thresholds);

// Fixed-point with 6 decimals, as used for p in curve files.
std::string format_fixed6(double value);

// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

double parse_double(std::string_view text);

// Minimal RFC 4180 field handling.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no);
std::string csv_field(std::string_view text);

// Writes `content` to `<file>.tmp` and renames it over `file`, so readers
// never observe a partially written artifact.
void write_file_atomic(const std::filesystem::path& file, std::string_view content);

std::string read_file(const std::filesystem::path& file);

}  // namespace roadperc
