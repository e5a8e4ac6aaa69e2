#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roadperc/error.hpp"
#include "roadperc/io.hpp"
#include "roadperc/network_io.hpp"
#include "roadperc/percolation.hpp"
#include "roadperc/report.hpp"
#include "roadperc/road_graph.hpp"
#include "roadperc/services.hpp"
#include "roadperc/summary.hpp"

namespace roadperc::cli {
namespace fs = std::filesystem;

namespace {

constexpr const char* kNodesFile = "network_nodes.csv";
constexpr const char* kEdgesFile = "network_edges.csv";
constexpr const char* kSummaryFile = "summary.json";

bool wants_error(Mode m) { return m == Mode::kError || m == Mode::kBoth; }
bool wants_attack(Mode m) { return m == Mode::kAttack || m == Mode::kBoth; }

template <typename Fn>
void write_artifact(const fs::path& file, Fn&& fill) {
  std::ostringstream buf;
  fill(buf);
  write_file_atomic(file, buf.str());
}

fs::path prepare_city_dir(const RunConfig& config) {
  const fs::path dir = config.city_dir();
  fs::create_directories(dir);
  return dir;
}

Summary load_summary(const RunConfig& config) {
  const fs::path file = config.city_dir() / kSummaryFile;
  if (fs::exists(file)) {
    Summary s = parse_summary_json(read_file(file));
    if (s.city_name == config.city_name) return s;
  }
  Summary fresh;
  fresh.city_name = config.city_name;
  return fresh;
}

void store_summary(const RunConfig& config, const Summary& summary) {
  write_file_atomic(config.city_dir() / kSummaryFile, summary_to_json(summary));
}

// Builds from --paths when given, otherwise loads the dump left by `build`.
RoadNetwork load_network(const RunConfig& config) {
  if (config.paths_file) return build_road_network(read_paths_file(*config.paths_file));
  const fs::path nodes = config.city_dir() / kNodesFile;
  const fs::path edges = config.city_dir() / kEdgesFile;
  if (!fs::exists(nodes) || !fs::exists(edges)) {
    throw ValidationError("no network for city \"" + config.city_name + "\": pass --paths or run build first (looked for " +
                          nodes.string() + ")");
  }
  return read_network_files(nodes, edges);
}

AvailabilitySummary to_summary(const AvailabilityReport& report, const AssignmentResult& assignment) {
  AvailabilitySummary s;
  for (const auto& [category, entry] : report.per_category) s.fractions[category] = entry.fraction;
  s.mean = report.mean;
  s.missing = report.missing;
  s.assigned = assignment.assigned.size();
  s.omitted = assignment.omitted.size();
  return s;
}

void record_availability(const RunConfig& config, const std::string& scheme,
                         const AvailabilityReport& report, const AssignmentResult& assignment,
                         Summary& summary, std::ostream& log) {
  write_artifact(config.city_dir() / ("availability_" + scheme + ".csv"),
                 [&](std::ostream& out) { write_availability_csv(out, report); });
  summary.availability[scheme] = to_summary(report, assignment);
  log << scheme << " availability mean " << format_fixed6(report.mean) << '\n';
  for (Category c : report.missing) {
    log << scheme << " availability: no venues in category \"" << label(c) << "\"\n";
  }
}

Mode parse_mode(const std::string& text) {
  if (text == "error") return Mode::kError;
  if (text == "attack") return Mode::kAttack;
  if (text == "both") return Mode::kBoth;
  throw ValidationError("--mode must be error, attack or both");
}

void add_common_options(CLI::App& app, RunConfig& config, std::string& mode) {
  app.add_option("--city", config.city_name, "City name (output subdirectory)")->required();
  app.add_option("--out", config.output_dir, "Output directory")->capture_default_str();
  app.add_option("--paths", config.paths_file, "Paths file (newline-delimited JSON)");
  app.add_option("--venues", config.venues_file, "Venues CSV");
  app.add_option("--mode", mode, "error | attack | both")->capture_default_str();
  app.add_option("--runs", config.runs, "Error-scheme repetitions")->capture_default_str();
  app.add_option("--checkpoint-fraction", config.checkpoint_fraction,
                 "Fraction of edges removed between checkpoints")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--radius-km", config.radius_km, "Venue assignment radius")->capture_default_str();
  app.add_option("--recompute-every", config.recompute_every,
                 "Attack: removals between betweenness recomputations")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads for Error ensembles")
      ->capture_default_str();
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.city_name.empty() || config.city_name == "." || config.city_name == ".." ||
      config.city_name.find_first_of("/\\") != std::string::npos) {
    throw ValidationError("--city must be a plain, non-empty name");
  }
  if (config.runs == 0) throw ValidationError("--runs must be positive");
  if (!(config.checkpoint_fraction > 0.0 && config.checkpoint_fraction <= 0.5)) {
    throw ValidationError("--checkpoint-fraction must lie in (0, 0.5]");
  }
  if (!(config.radius_km > 0.0) || !std::isfinite(config.radius_km)) {
    throw ValidationError("--radius-km must be positive");
  }
  if (config.recompute_every == 0) throw ValidationError("--recompute-every must be positive");
  if (config.threads == 0) throw ValidationError("--threads must be positive");
}

void cmd_build(const RunConfig& config, std::ostream& log) {
  validate(config);
  if (!config.paths_file) throw ValidationError("build requires --paths");
  const auto paths = read_paths_file(*config.paths_file);
  const RoadNetwork network = build_road_network(paths);
  const NetworkMetrics metrics = compute_metrics(network);

  const fs::path dir = prepare_city_dir(config);
  write_artifact(dir / kNodesFile, [&](std::ostream& out) { write_nodes_csv(out, network); });
  write_artifact(dir / kEdgesFile, [&](std::ostream& out) { write_edges_csv(out, network); });

  Summary metrics_only;
  metrics_only.city_name = config.city_name;
  metrics_only.metrics = metrics;
  write_file_atomic(dir / "metrics.json", summary_to_json(metrics_only));

  Summary summary = load_summary(config);
  summary.metrics = metrics;
  store_summary(config, summary);

  log << config.city_name << ": " << paths.size() << " paths -> V=" << metrics.v
      << " E=" << metrics.e << " length_km=" << format_fixed6(metrics.length_km)
      << " meshness=" << format_fixed6(metrics.meshness)
      << " organic=" << format_fixed6(metrics.organic) << '\n';
}

void cmd_percolate(const RunConfig& config, std::ostream& log) {
  validate(config);
  const RoadNetwork network = load_network(config);
  const fs::path dir = prepare_city_dir(config);
  Summary summary = load_summary(config);
  if (!summary.metrics && network.node_count() >= 3) summary.metrics = compute_metrics(network);

  if (wants_error(config.mode)) {
    const auto ensemble = run_error_ensemble(
        network, config.seed, {config.runs, config.checkpoint_fraction, config.threads});
    std::vector<double> thresholds;
    for (const auto& run : ensemble.runs) thresholds.push_back(run.p_c);
    write_artifact(dir / "error_curve.csv",
                   [&](std::ostream& out) { write_curve_csv(out, ensemble.mean_curve); });
    write_artifact(dir / "runs_pc.csv", [&](std::ostream& out) { write_runs_csv(out, thresholds); });
    summary.error = ErrorThreshold{ensemble.p_c_mean, ensemble.p_c_std, config.runs,
                                   config.checkpoint_fraction, config.seed};
    log << "error: p_c_mean=" << format_fixed6(ensemble.p_c_mean)
        << " p_c_std=" << format_fixed6(ensemble.p_c_std) << " runs=" << config.runs << '\n';
  }
  if (wants_attack(config.mode)) {
    const auto run = run_attack(network, config.recompute_every);
    write_artifact(dir / "attack_curve.csv",
                   [&](std::ostream& out) { write_curve_csv(out, run.curve); });
    summary.attack = AttackThreshold{run.p_c, config.recompute_every};
    log << "attack: p_c=" << format_fixed6(run.p_c) << " removals=" << run.removed_order.size()
        << '\n';
  }
  store_summary(config, summary);
}

void cmd_services(const RunConfig& config, std::ostream& log) {
  validate(config);
  if (!config.venues_file) throw ValidationError("services requires --venues");
  const auto venues = read_venues_file(*config.venues_file);
  const RoadNetwork network = load_network(config);
  prepare_city_dir(config);
  Summary summary = load_summary(config);

  const AssignmentResult assignment = assign_venues(network, venues, config.radius_km);
  log << "venues: " << venues.size() << " read, " << assignment.assigned.size() << " assigned, "
      << assignment.omitted.size() << " omitted (farther than " << format_roundtrip(config.radius_km)
      << " km from every node)\n";

  const std::vector<bool> everyone(network.node_count(), true);
  record_availability(config, "baseline",
                      availability_at_threshold(network, assignment.assigned, everyone), assignment,
                      summary, log);

  if (wants_error(config.mode)) {
    const auto ensemble = run_error_ensemble(
        network, config.seed, {config.runs, config.checkpoint_fraction, config.threads});
    std::vector<AvailabilityReport> per_run;
    for (const auto& run : ensemble.runs) {
      per_run.push_back(
          availability_at_threshold(network, assignment.assigned, gcc_at_threshold(network, run)));
    }
    record_availability(config, "error", average_availability(per_run), assignment, summary, log);
  }
  if (wants_attack(config.mode)) {
    const auto run = run_attack(network, config.recompute_every);
    record_availability(config, "attack",
                        availability_at_threshold(network, assignment.assigned,
                                                  gcc_at_threshold(network, run)),
                        assignment, summary, log);
  }
  store_summary(config, summary);
}

void cmd_report(const std::vector<fs::path>& summaries, const fs::path& output_dir,
                std::ostream& log) {
  if (summaries.empty()) throw ValidationError("report needs at least one summary.json");
  std::vector<Summary> cities;
  for (const auto& file : summaries) cities.push_back(parse_summary_json(read_file(file)));
  const CrossCityReport report = build_report(cities);

  fs::create_directories(output_dir);
  write_file_atomic(output_dir / "report.json", report_to_json(report));
  write_artifact(output_dir / "ranking.csv",
                 [&](std::ostream& out) { write_ranking_csv(out, report); });
  log << "report: " << cities.size() << " cities";
  if (report.correlation) log << ", pearson(error, attack)=" << format_fixed6(*report.correlation);
  log << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Road-network percolation toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "both";
  std::vector<fs::path> summaries;
  fs::path report_dir = ".";

  auto* build = app.add_subcommand("build", "Build the road network and its metrics");
  auto* percolate = app.add_subcommand("percolate", "Run Error and/or Attack percolation");
  auto* services = app.add_subcommand("services", "Service availability at the threshold");
  auto* pipeline = app.add_subcommand("pipeline", "build, percolate and (with --venues) services");
  for (auto* sub : {build, percolate, services, pipeline}) add_common_options(*sub, config, mode);

  auto* report = app.add_subcommand("report", "Rank cities and correlate thresholds");
  report->add_option("summaries", summaries, "summary.json files")->required();
  report->add_option("--out", report_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (!report->parsed()) config.mode = parse_mode(mode);
    if (build->parsed()) {
      cmd_build(config, out);
    } else if (percolate->parsed()) {
      cmd_percolate(config, out);
    } else if (services->parsed()) {
      cmd_services(config, out);
    } else if (pipeline->parsed()) {
      cmd_build(config, out);
      RunConfig from_dump = config;
      from_dump.paths_file.reset();
      cmd_percolate(from_dump, out);
      if (config.venues_file) cmd_services(from_dump, out);
    } else if (report->parsed()) {
      cmd_report(summaries, report_dir, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace roadperc::cli
