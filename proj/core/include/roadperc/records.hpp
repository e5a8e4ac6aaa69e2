#pragma once

#include <string>
#include <vector>

#include "roadperc/category.hpp"
#include "roadperc/geo.hpp"

namespace roadperc {

struct PathNode {
  std::string id;
  GeoPoint point;

  friend bool operator==(const PathNode&, const PathNode&) = default;
};

// One raw map path as contributed by mappers. Holds at least two nodes and
// never repeats a node id in consecutive positions.
struct PathRecord {
  std::string path_id;
  std::vector<PathNode> nodes;

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

struct VenueRecord {
  std::string venue_id;
  Category category = Category::kMedicalCenter;
  GeoPoint point;

  friend bool operator==(const VenueRecord&, const VenueRecord&) = default;
};

// Throws ValidationError if the path violates the record invariants.
void validate(const PathRecord& path);

}  // namespace roadperc
