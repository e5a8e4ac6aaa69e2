#include "roadperc/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "roadperc/error.hpp"
#include "roadperc/io.hpp"
#include "roadperc/stats.hpp"

namespace roadperc {
namespace {

void sort_ranking(std::vector<RankEntry>& ranking) {
  std::sort(ranking.begin(), ranking.end(), [](const RankEntry& x, const RankEntry& y) {
    return x.p_c < y.p_c || (x.p_c == y.p_c && x.city < y.city);
  });
}

}  // namespace

CrossCityReport build_report(std::span<const Summary> cities) {
  if (cities.empty()) throw ValidationError("report needs at least one city summary");
  CrossCityReport report;
  std::vector<double> error_pc;
  std::vector<double> attack_pc;
  for (const auto& city : cities) {
    if (city.error) report.error_ranking.push_back({city.city_name, city.error->p_c_mean});
    if (city.attack) report.attack_ranking.push_back({city.city_name, city.attack->p_c});
    if (city.error && city.attack) {
      error_pc.push_back(city.error->p_c_mean);
      attack_pc.push_back(city.attack->p_c);
    }
  }
  sort_ranking(report.error_ranking);
  sort_ranking(report.attack_ranking);
  report.correlated_cities = error_pc.size();
  if (error_pc.size() >= 2) {
    try {
      report.correlation = pearson(error_pc, attack_pc);
    } catch (const ValidationError&) {
      // zero variance: correlation stays undefined
    }
  }
  return report;
}

std::string report_to_json(const CrossCityReport& report) {
  using nlohmann::ordered_json;
  auto ranking = [](const std::vector<RankEntry>& entries) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out.push_back({{"rank", i + 1}, {"city", entries[i].city}, {"p_c", entries[i].p_c}});
    }
    return out;
  };
  ordered_json out;
  out["cities"] = std::max(report.error_ranking.size(), report.attack_ranking.size());
  out["error_ranking"] = ranking(report.error_ranking);
  out["attack_ranking"] = ranking(report.attack_ranking);
  out["correlated_cities"] = report.correlated_cities;
  if (report.correlation) out["pearson_error_attack"] = *report.correlation;
  return out.dump(2) + "\n";
}

void write_ranking_csv(std::ostream& out, const CrossCityReport& report) {
  out << "scheme,rank,city,p_c\n";
  auto rows = [&](const char* scheme, const std::vector<RankEntry>& entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out << scheme << ',' << i + 1 << ',' << csv_field(entries[i].city) << ','
          << format_fixed6(entries[i].p_c) << '\n';
    }
  };
  rows("error", report.error_ranking);
  rows("attack", report.attack_ranking);
}

}  // namespace roadperc
