#pragma once

#include <span>

namespace roadperc {

double mean(std::span<const double> xs);

// Population standard deviation (divides by n). Zero for a single value.
double population_stddev(std::span<const double> xs);

// Sample Pearson correlation. Throws ValidationError on length mismatch,
// fewer than two values, or zero variance in either input.
double pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace roadperc
