#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace klagg {

// A validated point of the probability simplex, stored non-increasing.
//
// Construction rejects non-positive entries, lengths below two, and masses
// further than 1e-9 from one; accepted input is sorted descending and rescaled
// so the total mass is one. The permutation applied by the sort is retained so
// partitions can be reported against the caller's original component order.
class Distribution {
public:
  static constexpr double normalization_tolerance = 1e-9;

  explicit Distribution(std::vector<double> raw);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }

  // Original index of the component now at sorted position i.
  std::size_t source_index(std::size_t i) const noexcept { return source_[i]; }
  std::span<const std::size_t> source_indices() const noexcept { return source_; }

  // Compensated sum of the m largest components.
  double prefix_mass(std::size_t m) const;

private:
  std::vector<double> probs_;
  std::vector<std::size_t> source_;
};

}  // namespace klagg
