#pragma once

#include <cstdint>

#include "distribution.hpp"

namespace klagg {

// Uniform draw from the simplex (normalized exponentials), sorted descending.
// Fully determined by (n, seed).
Distribution random_distribution(std::size_t n, std::uint64_t seed);

// The three-point family (1/2 - eps, 1/2 - eps, 2 eps) on which the greedy
// gap approaches one bit as eps shrinks. Requires 0 < eps < 1/6.
Distribution tightness_instance(double epsilon);

}  // namespace klagg
