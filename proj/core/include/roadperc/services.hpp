#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "roadperc/category.hpp"
#include "roadperc/geo.hpp"
#include "roadperc/records.hpp"
#include "roadperc/road_graph.hpp"

namespace roadperc {

inline constexpr double kDefaultAssignmentRadiusKm = 2.0;

// Distances closer than this are treated as equal; the smaller NodeId wins.
inline constexpr double kNearestTieKm = 1e-12;

struct ServiceAssignment {
  std::string venue_id;
  Category category = Category::kMedicalCenter;
  NodeId node{};
  double distance_km = 0.0;

  friend bool operator==(const ServiceAssignment&, const ServiceAssignment&) = default;
};

struct AssignmentResult {
  std::vector<ServiceAssignment> assigned;  // input order
  std::vector<std::string> omitted;         // venue ids beyond the radius
};

struct NearestNode {
  NodeId node{};
  double distance_km = 0.0;
};

// Exact nearest-node queries by haversine distance. Nodes are sorted by
// latitude; a query widens a latitude band around the venue and stops once
// the meridional distance alone exceeds the best candidate.
class NodeLocator {
 public:
  explicit NodeLocator(const RoadNetwork& network);

  // Throws ValidationError if the network has no nodes.
  NearestNode nearest(const GeoPoint& query) const;

 private:
  struct Entry {
    double lat;
    NodeId node;
    GeoPoint point;
  };
  std::vector<Entry> by_lat_;
};

// Binds each venue to its nearest node; venues farther than radius_km from
// every node are omitted. A venue at exactly radius_km is kept.
AssignmentResult assign_venues(const RoadNetwork& network, std::span<const VenueRecord> venues,
                               double radius_km = kDefaultAssignmentRadiusKm);

struct CategoryAvailability {
  std::size_t assigned = 0;
  double retained = 0.0;  // a count; fractional when averaged over runs
  double fraction = 0.0;

  friend bool operator==(const CategoryAvailability&, const CategoryAvailability&) = default;
};

struct AvailabilityReport {
  std::map<Category, CategoryAvailability> per_category;  // categories with venues
  std::vector<Category> missing;  // no assigned venues; excluded from mean
  double mean = 0.0;              // unweighted over per_category
};

// Fraction of each category's assigned venues whose node is in `surviving`.
// Throws ValidationError when there are no assignments.
AvailabilityReport availability_at_threshold(const RoadNetwork& network,
                                             std::span<const ServiceAssignment> assignments,
                                             const std::vector<bool>& surviving);

// Per-category average over reports built from the same assignments.
AvailabilityReport average_availability(std::span<const AvailabilityReport> reports);

// "category,assigned,retained,fraction", categories in canonical order.
// Missing categories are listed with assigned 0 and an empty fraction.
void write_availability_csv(std::ostream& out, const AvailabilityReport& report);

}  // namespace roadperc
