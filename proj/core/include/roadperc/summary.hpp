#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roadperc/category.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc {

struct ErrorThreshold {
  double p_c_mean = 0.0;
  double p_c_std = 0.0;
  std::size_t runs = 0;
  double checkpoint_fraction = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const ErrorThreshold&, const ErrorThreshold&) = default;
};

struct AttackThreshold {
  double p_c = 0.0;
  std::size_t recompute_every = 1;

  friend bool operator==(const AttackThreshold&, const AttackThreshold&) = default;
};

struct AvailabilitySummary {
  std::map<Category, double> fractions;
  double mean = 0.0;
  std::vector<Category> missing;
  std::size_t assigned = 0;
  std::size_t omitted = 0;

  friend bool operator==(const AvailabilitySummary&, const AvailabilitySummary&) = default;
};

// Per-city result record (summary.json). Every section is optional so that
// each pipeline stage can fill in its own part.
struct Summary {
  std::string city_name;
  std::optional<NetworkMetrics> metrics;
  std::optional<ErrorThreshold> error;
  std::optional<AttackThreshold> attack;
  // Keyed by scheme: "baseline", "error", "attack".
  std::map<std::string, AvailabilitySummary> availability;

  // Scheme reported under the top-level "availability" field: attack, then
  // error, then baseline, whichever is present first.
  std::optional<std::string> headline_scheme() const;

  friend bool operator==(const Summary&, const Summary&) = default;
};

std::string summary_to_json(const Summary& summary);
Summary parse_summary_json(std::string_view text);

}  // namespace roadperc
