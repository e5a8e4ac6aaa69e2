#include "roadperc/summary.hpp"

#include <json.hpp>

#include "roadperc/error.hpp"

namespace roadperc {
namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemes[] = {"attack", "error", "baseline"};

ordered_json availability_fields(const AvailabilitySummary& a) {
  ordered_json out = ordered_json::object();
  for (const auto& [category, fraction] : a.fractions) out[std::string(label(category))] = fraction;
  out["mean"] = a.mean;
  return out;
}

ordered_json availability_detail(const AvailabilitySummary& a) {
  ordered_json fractions = ordered_json::object();
  for (const auto& [category, fraction] : a.fractions) {
    fractions[std::string(label(category))] = fraction;
  }
  ordered_json missing = ordered_json::array();
  for (Category c : a.missing) missing.push_back(std::string(label(c)));
  return {{"fractions", std::move(fractions)},
          {"mean", a.mean},
          {"missing", std::move(missing)},
          {"assigned", a.assigned},
          {"omitted", a.omitted}};
}

Category category_or_throw(const std::string& text) {
  auto c = parse_category(text);
  if (!c) throw ValidationError("summary: unknown category \"" + text + "\"");
  return *c;
}

}  // namespace

std::optional<std::string> Summary::headline_scheme() const {
  for (const char* scheme : kSchemes) {
    if (availability.contains(scheme)) return std::string(scheme);
  }
  return std::nullopt;
}

std::string summary_to_json(const Summary& s) {
  ordered_json out;
  out["city_name"] = s.city_name;
  if (s.metrics) {
    const auto& m = *s.metrics;
    out["metrics"] = {{"v", m.v},
                      {"e", m.e},
                      {"length_km", m.length_km},
                      {"avg_degree", m.avg_degree},
                      {"meshness", m.meshness},
                      {"organic", m.organic}};
  }
  if (s.error) {
    const auto& e = *s.error;
    out["error"] = {{"p_c_mean", e.p_c_mean},
                    {"p_c_std", e.p_c_std},
                    {"runs", e.runs},
                    {"checkpoint_fraction", e.checkpoint_fraction},
                    {"seed", e.seed}};
  }
  if (s.attack) {
    out["attack"] = {{"p_c", s.attack->p_c}, {"recompute_every", s.attack->recompute_every}};
  }
  if (auto scheme = s.headline_scheme()) {
    out["availability"] = availability_fields(s.availability.at(*scheme));
    out["availability_scheme"] = *scheme;
    ordered_json by_scheme = ordered_json::object();
    for (const char* name : kSchemes) {
      auto it = s.availability.find(name);
      if (it != s.availability.end()) by_scheme[name] = availability_detail(it->second);
    }
    out["availability_by_scheme"] = std::move(by_scheme);
  }
  out["conventions"] = {
      {"network", "giant component of the pruned multigraph; parallel edges kept, self-loops dropped"},
      {"betweenness", "unweighted shortest paths over ordered node pairs"},
      {"error_p_c", "mean of per-run thresholds"},
  };
  return out.dump(2) + "\n";
}

Summary parse_summary_json(std::string_view text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("summary: malformed JSON: ") + e.what());
  }
  try {
    Summary s;
    s.city_name = in.at("city_name").get<std::string>();
    if (in.contains("metrics")) {
      const auto& m = in.at("metrics");
      s.metrics = NetworkMetrics{m.at("v").get<std::size_t>(),        m.at("e").get<std::size_t>(),
                                 m.at("length_km").get<double>(),     m.at("avg_degree").get<double>(),
                                 m.at("meshness").get<double>(),      m.at("organic").get<double>()};
    }
    if (in.contains("error")) {
      const auto& e = in.at("error");
      s.error = ErrorThreshold{e.at("p_c_mean").get<double>(), e.at("p_c_std").get<double>(),
                               e.at("runs").get<std::size_t>(),
                               e.at("checkpoint_fraction").get<double>(),
                               e.at("seed").get<std::uint64_t>()};
    }
    if (in.contains("attack")) {
      const auto& a = in.at("attack");
      s.attack = AttackThreshold{a.at("p_c").get<double>(),
                                 a.at("recompute_every").get<std::size_t>()};
    }
    if (in.contains("availability_by_scheme")) {
      for (const auto& [scheme, detail] : in.at("availability_by_scheme").items()) {
        AvailabilitySummary a;
        for (const auto& [name, fraction] : detail.at("fractions").items()) {
          a.fractions[category_or_throw(name)] = fraction.get<double>();
        }
        a.mean = detail.at("mean").get<double>();
        for (const auto& name : detail.at("missing")) {
          a.missing.push_back(category_or_throw(name.get<std::string>()));
        }
        a.assigned = detail.at("assigned").get<std::size_t>();
        a.omitted = detail.at("omitted").get<std::size_t>();
        s.availability[scheme] = std::move(a);
      }
    }
    return s;
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("summary: ") + e.what());
  }
}

}  // namespace roadperc
