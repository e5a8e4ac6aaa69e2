#include "roadperc/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "roadperc/error.hpp"

namespace roadperc {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

bool is_valid(const GeoPoint& p) noexcept {
  return std::isfinite(p.lon) && std::isfinite(p.lat) && p.lon >= -180.0 && p.lon <= 180.0 &&
         p.lat >= -90.0 && p.lat <= 90.0;
}

void validate(const GeoPoint& p) {
  if (!is_valid(p)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "coordinate out of range (lon " << p.lon << ", lat " << p.lat << ")";
    throw ValidationError(msg.str());
  }
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  // Absolute differences and a commutative product keep the result
  // independent of argument order.
  const double dlat = std::fabs(a.lat - b.lat) * kDegToRad;
  const double dlon = std::fabs(a.lon - b.lon) * kDegToRad;
  const double s_lat = std::sin(dlat / 2.0);
  const double s_lon = std::sin(dlon / 2.0);
  const double h = s_lat * s_lat + std::cos(a.lat * kDegToRad) * std::cos(b.lat * kDegToRad) *
                                       s_lon * s_lon;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::min(1.0, h)));
}

}  // namespace roadperc
