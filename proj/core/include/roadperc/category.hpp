#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace roadperc {

// The closed set of service categories. Order is the canonical output order.
enum class Category : unsigned char {
  kMedicalCenter,
  kTravelTransport,
  kFood,
  kCollegeUniversity,
  kResidence,
  kArtsEntertainment,
  kShopsService,
  kNightlifeSpot,
  kProfessionalOther,
  kOutdoorsRecreation,
};

inline constexpr std::size_t kCategoryCount = 10;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::kMedicalCenter,     Category::kTravelTransport,   Category::kFood,
    Category::kCollegeUniversity, Category::kResidence,         Category::kArtsEntertainment,
    Category::kShopsService,      Category::kNightlifeSpot,     Category::kProfessionalOther,
    Category::kOutdoorsRecreation,
};

// Canonical, case-sensitive label, e.g. "Travel & Transport".
std::string_view label(Category c) noexcept;

std::optional<Category> parse_category(std::string_view text) noexcept;

constexpr std::size_t index(Category c) noexcept { return static_cast<std::size_t>(c); }

}  // namespace roadperc
