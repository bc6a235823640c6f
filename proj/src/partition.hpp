#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "distribution.hpp"

namespace klagg {

// A strict partition covers every one of its m blocks; a relaxed one may
// leave blocks empty (first-fit output can do that).
enum class Strictness { strict, relaxed };

// Convention used when pairing an aggregated vector against the reference
// components: sorted_canonical sorts the aggregate descending first,
// bin_index pairs block i with component i directly.
enum class Pairing { sorted_canonical, bin_index };

class PartitionMap {
public:
  PartitionMap(std::vector<std::size_t> block_of, std::size_t m, Strictness strictness);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return m_; }
  std::span<const std::size_t> block_of() const noexcept { return block_of_; }
  bool is_strict() const noexcept { return strict_; }

private:
  std::vector<std::size_t> block_of_;
  std::size_t m_;
  bool strict_;
};

struct AggregationResult {
  std::vector<double> q;                      // per-block mass, block-index order
  PartitionMap partition;                     // in sorted (solver) index space
  std::vector<std::size_t> blocks_by_source;  // block per original input index
  double divergence_bits = std::numeric_limits<double>::quiet_NaN();
  double divergence_bin_bits = std::numeric_limits<double>::quiet_NaN();
  Pairing pairing = Pairing::sorted_canonical;  // convention of divergence_bits

  double divergence(Pairing p) const noexcept {
    return p == pairing ? divergence_bits : divergence_bin_bits;
  }
};

// Sums the components of p into the blocks of pi with compensated
// accumulation. Divergence fields are left for the caller to fill.
AggregationResult apply_partition(const Distribution& p, const PartitionMap& pi);

}  // namespace klagg
