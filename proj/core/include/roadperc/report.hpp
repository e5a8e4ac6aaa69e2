#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "roadperc/summary.hpp"

namespace roadperc {

struct RankEntry {
  std::string city;
  double p_c = 0.0;
};

struct CrossCityReport {
  std::vector<RankEntry> error_ranking;   // ascending p_c: weakest first
  std::vector<RankEntry> attack_ranking;
  // Pearson correlation of error vs attack thresholds over cities that have
  // both; absent with fewer than two such cities or zero variance.
  std::optional<double> correlation;
  std::size_t correlated_cities = 0;
};

CrossCityReport build_report(std::span<const Summary> cities);

std::string report_to_json(const CrossCityReport& report);

// "scheme,rank,city,p_c"
void write_ranking_csv(std::ostream& out, const CrossCityReport& report);

}  // namespace roadperc
