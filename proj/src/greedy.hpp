#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "distribution.hpp"
#include "partition.hpp"

namespace klagg {

// paper: verbatim first-fit with overstuffing; the output may leave blocks
//        empty and is flagged relaxed.
// strict: same first-fit, but once the number of unplaced items equals the
//         number of still-empty bins, the remaining items go largest-first
//         into the empty bins smallest-index-first, so every block is filled.
enum class GreedyMode { paper, strict };

enum class GreedyEngine { naive, tree };

// Segment tree over per-bin remaining slack; each node holds the maximum
// slack in its subtree, so the smallest feasible bin index is found in
// O(log m).
class CapacityTree {
public:
  explicit CapacityTree(std::span<const double> slack);

  // Smallest bin index whose slack exceeds item, or nullopt.
  std::optional<std::size_t> leftmost_feasible(double item) const;

  void consume(std::size_t bin, double item);
  double slack(std::size_t bin) const { return nodes_[leaves_ + bin]; }

private:
  std::size_t bins_;
  std::size_t leaves_;  // power-of-two padding
  std::vector<double> nodes_;
};

struct GreedyState {
  std::vector<double> capacities;  // head components of p over their mass
  std::vector<double> thresholds;  // (1 + head mass) * capacity
  std::vector<double> contents;    // running bin contents
  std::vector<std::size_t> assignment;
  std::size_t items_placed = 0;
};

// First-fit bin packing of the components of p into m bins with capacities
// p_j / S and overstuffing thresholds (1 + S) * p_j / S, S the mass of the m
// largest components. Both engines walk the identical placement sequence;
// the tree engine does it in O(n log m).
AggregationResult greedy_approx(const Distribution& p, std::size_t m,
                                GreedyMode mode = GreedyMode::strict,
                                GreedyEngine engine = GreedyEngine::tree);

// As above but also exposes the final packing state for inspection.
AggregationResult greedy_approx(const Distribution& p, std::size_t m, GreedyMode mode,
                                GreedyEngine engine, GreedyState& state_out);

}  // namespace klagg
