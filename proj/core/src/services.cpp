#include "roadperc/services.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>

#include "roadperc/error.hpp"
#include "roadperc/io.hpp"

namespace roadperc {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Slack on the latitude lower bound, far above its rounding error.
constexpr double kBoundSlackKm = 1e-9;

double meridional_km(double lat_a, double lat_b) {
  return kEarthRadiusKm * std::fabs(lat_a - lat_b) * kDegToRad;
}

}  // namespace

NodeLocator::NodeLocator(const RoadNetwork& network) {
  by_lat_.reserve(network.node_count());
  for (std::size_t i = 0; i < network.node_count(); ++i) {
    const auto& p = network.node(node_id(i)).point;
    by_lat_.push_back({p.lat, node_id(i), p});
  }
  std::sort(by_lat_.begin(), by_lat_.end(), [](const Entry& x, const Entry& y) {
    return x.lat < y.lat || (x.lat == y.lat && x.node < y.node);
  });
}

NearestNode NodeLocator::nearest(const GeoPoint& query) const {
  if (by_lat_.empty()) throw ValidationError("nearest node query on an empty network");
  const auto start = static_cast<std::size_t>(
      std::lower_bound(by_lat_.begin(), by_lat_.end(), query.lat,
                       [](const Entry& e, double lat) { return e.lat < lat; }) -
      by_lat_.begin());

  // Visits entries outward from the query latitude until the meridional
  // distance exceeds `limit()`.
  auto sweep = [&](auto&& visit, auto&& limit) {
    std::size_t up = start;
    std::size_t down = start;
    bool up_open = true;
    bool down_open = true;
    while (up_open || down_open) {
      if (up_open) {
        if (up >= by_lat_.size() || meridional_km(by_lat_[up].lat, query.lat) > limit()) {
          up_open = false;
        } else {
          visit(by_lat_[up++]);
        }
      }
      if (down_open) {
        if (down == 0 || meridional_km(by_lat_[down - 1].lat, query.lat) > limit()) {
          down_open = false;
        } else {
          visit(by_lat_[--down]);
        }
      }
    }
  };

  double best = std::numeric_limits<double>::infinity();
  sweep([&](const Entry& e) { best = std::min(best, haversine_km(query, e.point)); },
        [&] { return best + kBoundSlackKm; });

  // Smallest id among everything within the tie tolerance of the minimum.
  const double cutoff = best + kNearestTieKm;
  NearestNode result{by_lat_.front().node, std::numeric_limits<double>::infinity()};
  bool found = false;
  sweep(
      [&](const Entry& e) {
        const double d = haversine_km(query, e.point);
        if (d > cutoff) return;
        if (!found || e.node < result.node) {
          result = {e.node, d};
          found = true;
        }
      },
      [&] { return cutoff + kBoundSlackKm; });
  return result;
}

AssignmentResult assign_venues(const RoadNetwork& network, std::span<const VenueRecord> venues,
                               double radius_km) {
  if (network.empty()) throw ValidationError("cannot assign venues to an empty network");
  if (!(radius_km > 0.0) || !std::isfinite(radius_km)) {
    throw ValidationError("assignment radius must be positive");
  }
  const NodeLocator locator(network);
  AssignmentResult result;
  for (const auto& venue : venues) {
    const NearestNode hit = locator.nearest(venue.point);
    if (hit.distance_km > radius_km) {
      result.omitted.push_back(venue.venue_id);
      continue;
    }
    result.assigned.push_back({venue.venue_id, venue.category, hit.node, hit.distance_km});
  }
  return result;
}

AvailabilityReport availability_at_threshold(const RoadNetwork& network,
                                             std::span<const ServiceAssignment> assignments,
                                             const std::vector<bool>& surviving) {
  if (assignments.empty()) throw ValidationError("no assigned venues");
  if (surviving.size() != network.node_count()) {
    throw ValidationError("surviving node mask does not match the network");
  }
  std::array<std::size_t, kCategoryCount> assigned{};
  std::array<std::size_t, kCategoryCount> retained{};
  for (const auto& a : assignments) {
    ++assigned[index(a.category)];
    if (surviving[to_index(a.node)]) ++retained[index(a.category)];
  }

  AvailabilityReport report;
  double sum = 0.0;
  for (Category c : kAllCategories) {
    const auto i = index(c);
    if (assigned[i] == 0) {
      report.missing.push_back(c);
      continue;
    }
    const double fraction =
        static_cast<double>(retained[i]) / static_cast<double>(assigned[i]);
    report.per_category[c] = {assigned[i], static_cast<double>(retained[i]), fraction};
    sum += fraction;
  }
  report.mean = sum / static_cast<double>(report.per_category.size());
  return report;
}

AvailabilityReport average_availability(std::span<const AvailabilityReport> reports) {
  if (reports.empty()) throw ValidationError("no availability reports to average");
  AvailabilityReport out;
  out.missing = reports.front().missing;
  const double count = static_cast<double>(reports.size());
  for (const auto& [category, first] : reports.front().per_category) {
    CategoryAvailability avg{first.assigned, 0.0, 0.0};
    for (const auto& r : reports) {
      const auto& entry = r.per_category.at(category);
      avg.retained += entry.retained;
      avg.fraction += entry.fraction;
    }
    avg.retained /= count;
    avg.fraction /= count;
    out.per_category[category] = avg;
  }
  double sum = 0.0;
  for (const auto& [category, entry] : out.per_category) sum += entry.fraction;
  out.mean = sum / static_cast<double>(out.per_category.size());
  return out;
}

void write_availability_csv(std::ostream& out, const AvailabilityReport& report) {
  out << "category,assigned,retained,fraction\n";
  for (Category c : kAllCategories) {
    out << csv_field(label(c)) << ',';
    auto it = report.per_category.find(c);
    if (it == report.per_category.end()) {
      out << "0,0,\n";
      continue;
    }
    const auto& entry = it->second;
    out << entry.assigned << ',';
    if (entry.retained == std::floor(entry.retained)) {
      out << static_cast<std::size_t>(entry.retained);
    } else {
      out << format_fixed6(entry.retained);
    }
    out << ',' << format_fixed6(entry.fraction) << '\n';
  }
}

}  // namespace roadperc
