#pragma once

namespace roadperc {

// IUGG mean Earth radius.
inline constexpr double kEarthRadiusKm = 6371.0088;

struct GeoPoint {
  double lon = 0.0;  // degrees, [-180, 180]
  double lat = 0.0;  // degrees, [-90, 90]

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool is_valid(const GeoPoint& p) noexcept;

// Throws ValidationError when the point is non-finite or out of range.
void validate(const GeoPoint& p);

// Great-circle distance on a sphere of radius kEarthRadiusKm.
// Symmetric bit-for-bit: haversine_km(a, b) == haversine_km(b, a).
double haversine_km(const GeoPoint& a, const GeoPoint& b);

}  // namespace roadperc
