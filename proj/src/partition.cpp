#include "partition.hpp"

#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

PartitionMap::PartitionMap(std::vector<std::size_t> block_of, std::size_t m,
                           Strictness strictness)
    : block_of_(std::move(block_of)), m_(m), strict_(strictness == Strictness::strict) {
  if (m_ == 0) fail(errc::bad_m, "partition needs at least one block");
  if (block_of_.empty()) fail(errc::length_mismatch, "empty assignment");
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    if (block_of_[i] >= m_) {
      fail(errc::block_out_of_range, "index " + std::to_string(i) + " assigned to block " +
                                         std::to_string(block_of_[i]) + " of " +
                                         std::to_string(m_));
    }
  }
  if (strict_) {
    std::vector<bool> seen(m_, false);
    for (std::size_t b : block_of_) seen[b] = true;
    for (std::size_t b = 0; b < m_; ++b) {
      if (!seen[b]) fail(errc::empty_block, "strict partition leaves block " +
                                                std::to_string(b) + " empty");
    }
  }
}

AggregationResult apply_partition(const Distribution& p, const PartitionMap& pi) {
  if (pi.size() != p.size()) {
    fail(errc::length_mismatch, "partition covers " + std::to_string(pi.size()) +
                                    " components, distribution has " +
                                    std::to_string(p.size()));
  }
  const std::size_t m = pi.block_count();
  std::vector<KahanSum> acc(m);
  const auto probs = p.probs();
  const auto blocks = pi.block_of();
  for (std::size_t i = 0; i < probs.size(); ++i) acc[blocks[i]].add(probs[i]);

  std::vector<double> q(m);
  for (std::size_t b = 0; b < m; ++b) q[b] = acc[b].value();

  std::vector<std::size_t> by_source(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) by_source[p.source_index(i)] = blocks[i];

  return AggregationResult{std::move(q), pi, std::move(by_source)};
}

}  // namespace klagg
