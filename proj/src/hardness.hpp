#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distribution.hpp"
#include "exact.hpp"

namespace klagg {

// A multiset of 3m positive integers summing to m * target, stored
// descending. The question it poses: can it be split into m triplets each
// summing to target?
class ThreePartitionInstance {
public:
  ThreePartitionInstance(std::vector<long long> values, long long target);

  std::span<const long long> values() const noexcept { return values_; }
  std::size_t m() const noexcept { return values_.size() / 3; }
  long long target() const noexcept { return target_; }

private:
  std::vector<long long> values_;
  long long target_;
};

// Maps the instance onto a distribution with m leading components of
// 1/(m+1) followed by (a_i + 2T) / ((m+1) 7mT) per value. Components are
// exact integer ratios over a common denominator, rendered to doubles only
// at the end; the tail sums to exactly 1/(m+1).
Distribution encode(const ThreePartitionInstance& inst);

// log2((m+1)/m): the minimum divergence an encoded instance can reach, and
// it reaches it exactly when the instance is solvable.
double target_value(std::size_t m);

using Triplet = std::array<std::size_t, 3>;

struct DecideResult {
  bool yes = false;
  std::optional<std::vector<Triplet>> certificate;  // indices into values()
  double opt_bits = 0.0;
  double target_bits = 0.0;
  std::uint64_t partitions_enumerated = 0;
};

// Decides the instance by encoding it and running the exhaustive solver:
// solvable exactly when the optimum matches target_value(m) within 1e-9.
// On yes, the triplet split is recovered from the optimal aggregation and
// verified. A demonstration at toy scale (n + m <= 14 unless forced), not a
// solver.
DecideResult decide_by_oracle(const ThreePartitionInstance& inst, bool force = false);

// True iff the triples are disjoint, cover every index, have size three and
// each sums to the target. Pure integer arithmetic; malformed input returns
// false rather than throwing.
bool verify_certificate(const ThreePartitionInstance& inst,
                        std::span<const Triplet> triplets);

}  // namespace klagg
