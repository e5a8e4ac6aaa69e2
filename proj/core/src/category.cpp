#include "roadperc/category.hpp"

namespace roadperc {
namespace {

constexpr std::array<std::string_view, kCategoryCount> kLabels = {
    "Medical Center",
    "Travel & Transport",
    "Food",
    "College & University",
    "Residence",
    "Arts & Entertainment",
    "Shops & Service",
    "Nightlife Spot",
    "Professional & Other Places",
    "Outdoors & Recreation",
};

}  // namespace

std::string_view label(Category c) noexcept { return kLabels[index(c)]; }

std::optional<Category> parse_category(std::string_view text) noexcept {
  for (Category c : kAllCategories) {
    if (kLabels[index(c)] == text) return c;
  }
  return std::nullopt;
}

}  // namespace roadperc
