#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace roadperc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitValidation = 2,
};

enum class Mode { kError, kAttack, kBoth };

struct RunConfig {
  std::string city_name;
  std::optional<std::filesystem::path> paths_file;
  std::optional<std::filesystem::path> venues_file;
  std::filesystem::path output_dir = ".";
  Mode mode = Mode::kBoth;
  std::size_t runs = 50;
  double checkpoint_fraction = 0.01;
  std::uint64_t seed = 42;
  double radius_km = 2.0;
  std::size_t recompute_every = 1;
  unsigned threads = 1;

  std::filesystem::path city_dir() const { return output_dir / city_name; }
};

// Throws ValidationError on any out-of-range parameter.
void validate(const RunConfig& config);

// Each command writes its artifacts under <output_dir>/<city_name>/ and
// merges its section into summary.json. Errors propagate as exceptions.
void cmd_build(const RunConfig& config, std::ostream& log);
void cmd_percolate(const RunConfig& config, std::ostream& log);
void cmd_services(const RunConfig& config, std::ostream& log);
void cmd_report(const std::vector<std::filesystem::path>& summaries,
                const std::filesystem::path& output_dir, std::ostream& log);

// Parses arguments, dispatches, and maps exceptions to exit codes:
// 0 success, 1 runtime failure, 2 input validation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace roadperc::cli
