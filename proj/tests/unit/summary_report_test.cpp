#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "roadperc/error.hpp"
#include "roadperc/report.hpp"
#include "roadperc/summary.hpp"

namespace roadperc {
namespace {

Summary random_summary(std::mt19937_64& rng, const std::string& city) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Summary s;
  s.city_name = city;
  s.metrics = NetworkMetrics{rng() % 100000, rng() % 200000, unit(rng) * 5000, unit(rng) * 4,
                             unit(rng), unit(rng)};
  s.error = ErrorThreshold{unit(rng), unit(rng) / 10, 50, 0.01, rng()};
  s.attack = AttackThreshold{unit(rng) / 10, 1 + rng() % 10};
  for (const char* scheme : {"baseline", "error", "attack"}) {
    AvailabilitySummary a;
    double sum = 0.0;
    for (Category c : kAllCategories) {
      if (rng() % 4 == 0) {
        a.missing.push_back(c);
        continue;
      }
      a.fractions[c] = unit(rng);
      sum += a.fractions[c];
    }
    a.mean = a.fractions.empty() ? 0.0 : sum / static_cast<double>(a.fractions.size());
    a.assigned = rng() % 1000;
    a.omitted = rng() % 10;
    s.availability[scheme] = a;
  }
  return s;
}

TEST(SummaryJson, RoundTripIsValueIdentical) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 50; ++i) {
    const Summary s = random_summary(rng, "City \"" + std::to_string(i) + "\" / é");
    const std::string text = summary_to_json(s);
    EXPECT_EQ(parse_summary_json(text), s);
    EXPECT_EQ(summary_to_json(parse_summary_json(text)), text);
  }
}

TEST(SummaryJson, PartialSummaries) {
  Summary s;
  s.city_name = "only-metrics";
  s.metrics = NetworkMetrics{5, 4, 1.5, 1.6, 0.0, 0.8};
  EXPECT_EQ(parse_summary_json(summary_to_json(s)), s);
  EXPECT_EQ(summary_to_json(s).find("availability"), std::string::npos);
}

TEST(SummaryJson, TopLevelLayout) {
  std::mt19937_64 rng(82);
  const Summary s = random_summary(rng, "x");
  const std::string text = summary_to_json(s);
  for (const char* key : {"\"city_name\"", "\"metrics\"", "\"v\"", "\"e\"", "\"length_km\"",
                          "\"avg_degree\"", "\"meshness\"", "\"organic\"", "\"error\"",
                          "\"p_c_mean\"", "\"p_c_std\"", "\"runs\"", "\"attack\"", "\"p_c\"",
                          "\"availability\"", "\"mean\"", "\"availability_scheme\": \"attack\""}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(s.headline_scheme(), "attack");
}

TEST(SummaryJson, MalformedInput) {
  EXPECT_THROW(parse_summary_json("{"), ValidationError);
  EXPECT_THROW(parse_summary_json("{}"), ValidationError);
  EXPECT_THROW(parse_summary_json(R"({"city_name": "x", "metrics": {"v": 1}})"), ValidationError);
}

Summary city(const std::string& name, std::optional<double> error_pc, std::optional<double> attack_pc) {
  Summary s;
  s.city_name = name;
  if (error_pc) s.error = ErrorThreshold{*error_pc, 0.0, 50, 0.01, 42};
  if (attack_pc) s.attack = AttackThreshold{*attack_pc, 1};
  return s;
}

TEST(Report, SingleCityHasNoCorrelation) {
  const std::vector<Summary> cities{city("Doha", 0.3, 0.05)};
  const auto report = build_report(cities);
  EXPECT_EQ(report.error_ranking.size(), 1u);
  EXPECT_EQ(report.attack_ranking.size(), 1u);
  EXPECT_FALSE(report.correlation);
  EXPECT_EQ(report_to_json(report).find("pearson"), std::string::npos);
}

TEST(Report, IdenticalVectorsCorrelatePerfectly) {
  const std::vector<Summary> cities{city("A", 0.2, 0.2), city("B", 0.3, 0.3)};
  EXPECT_DOUBLE_EQ(*build_report(cities).correlation, 1.0);
}

TEST(Report, FiveCitiesMatchDirectFormula) {
  const std::vector<double> e{0.17, 0.35, 0.22, 0.30, 0.25};
  const std::vector<double> a{0.01, 0.09, 0.05, 0.03, 0.09};
  std::vector<Summary> cities;
  for (std::size_t i = 0; i < e.size(); ++i) cities.push_back(city("c" + std::to_string(i), e[i], a[i]));

  long double me = 0, ma = 0;
  for (std::size_t i = 0; i < 5; ++i) me += e[i], ma += a[i];
  me /= 5, ma /= 5;
  long double sea = 0, see = 0, saa = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    sea += (e[i] - me) * (a[i] - ma);
    see += (e[i] - me) * (e[i] - me);
    saa += (a[i] - ma) * (a[i] - ma);
  }
  const double expected = static_cast<double>(sea / std::sqrt(see * saa));
  const auto report = build_report(cities);
  ASSERT_TRUE(report.correlation);
  EXPECT_NEAR(*report.correlation, expected, 1e-12);
  EXPECT_EQ(report.correlated_cities, 5u);
}

TEST(Report, RankingsSortWeakestFirst) {
  const std::vector<Summary> cities{city("Boston", 0.35, 0.07), city("Wellington", 0.17, 0.04),
                                    city("Cali", 0.35, std::nullopt), city("Rome", std::nullopt, 0.09)};
  const auto report = build_report(cities);
  ASSERT_EQ(report.error_ranking.size(), 3u);
  EXPECT_EQ(report.error_ranking[0].city, "Wellington");
  EXPECT_EQ(report.error_ranking[1].city, "Boston");  // tie with Cali, by name
  EXPECT_EQ(report.error_ranking[2].city, "Cali");
  ASSERT_EQ(report.attack_ranking.size(), 3u);
  EXPECT_EQ(report.attack_ranking[2].city, "Rome");
  EXPECT_EQ(report.correlated_cities, 2u);

  std::ostringstream csv;
  write_ranking_csv(csv, report);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "scheme,rank,city,p_c");
  EXPECT_NE(csv.str().find("error,1,Wellington,0.170000\n"), std::string::npos);
}

TEST(Report, ZeroVarianceOmitsCorrelation) {
  const std::vector<Summary> cities{city("A", 0.2, 0.05), city("B", 0.3, 0.05)};
  EXPECT_FALSE(build_report(cities).correlation);
}

TEST(Report, EmptyInput) { EXPECT_THROW(build_report({}), ValidationError); }

}  // namespace
}  // namespace roadperc
