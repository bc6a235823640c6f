#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distribution.hpp"
#include "partition.hpp"

namespace klagg {

// Streams every partition of {0,..,n-1} into exactly m nonempty blocks, each
// once, as restricted growth strings in lexicographic order. Guarded at
// n <= 14 unless forced; the count is the Stirling number S(n, m).
class PartitionEnumerator {
public:
  static constexpr std::size_t max_default_n = 14;

  PartitionEnumerator(std::size_t n, std::size_t m, bool force = false);

  // Advances to the next partition; false once exhausted.
  bool next();

  // Block label per element; valid after next() returned true.
  std::span<const std::size_t> labels() const noexcept { return labels_; }

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

struct ExactResult {
  AggregationResult aggregation;
  std::uint64_t partitions_enumerated = 0;
  // Partitions whose canonical divergence ties the reported minimum exactly;
  // the first in enumeration order is the one returned.
  std::uint64_t optima_ties = 0;
};

// Exhaustive minimizer of the canonical divergence over all strict m-block
// aggregations of p. Ground truth for the approximation bound; not meant to
// scale past the n <= 14 guard.
ExactResult exact_opt(const Distribution& p, std::size_t m, bool force = false);

}  // namespace klagg
