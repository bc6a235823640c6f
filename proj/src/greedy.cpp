#include "greedy.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>

#include "divergence.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

CapacityTree::CapacityTree(std::span<const double> slack) : bins_(slack.size()) {
  leaves_ = 1;
  while (leaves_ < bins_) leaves_ <<= 1;
  nodes_.assign(2 * leaves_, -std::numeric_limits<double>::infinity());
  for (std::size_t b = 0; b < bins_; ++b) nodes_[leaves_ + b] = slack[b];
  for (std::size_t i = leaves_ - 1; i >= 1; --i) {
    nodes_[i] = std::max(nodes_[2 * i], nodes_[2 * i + 1]);
  }
}

std::optional<std::size_t> CapacityTree::leftmost_feasible(double item) const {
  if (!(nodes_[1] > item)) return std::nullopt;
  std::size_t node = 1;
  while (node < leaves_) {
    node = nodes_[2 * node] > item ? 2 * node : 2 * node + 1;
  }
  return node - leaves_;
}

void CapacityTree::consume(std::size_t bin, double item) {
  std::size_t node = leaves_ + bin;
  nodes_[node] -= item;
  for (node >>= 1; node >= 1; node >>= 1) {
    nodes_[node] = std::max(nodes_[2 * node], nodes_[2 * node + 1]);
  }
}

namespace {

std::size_t scan_feasible(std::span<const double> slack, double item) {
  for (std::size_t j = 0; j < slack.size(); ++j) {
    if (slack[j] > item) return j;
  }
  return slack.size();
}

}  // namespace

AggregationResult greedy_approx(const Distribution& p, std::size_t m, GreedyMode mode,
                                GreedyEngine engine, GreedyState& state) {
  const std::size_t n = p.size();
  if (m < 1 || m >= n) {
    fail(errc::bad_m,
         "m must satisfy 1 <= m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  const auto probs = p.probs();
  const double head_mass = p.prefix_mass(m);
  const double stuffing = 1.0 + head_mass;

  state.capacities.resize(m);
  state.thresholds.resize(m);
  state.contents.assign(m, 0.0);
  state.assignment.assign(n, 0);
  state.items_placed = 0;

  // Both engines place by the same slack comparison so their assignments
  // match item for item; slack starts at the threshold and shrinks by the
  // exact weights placed.
  std::vector<double> slack(m);
  for (std::size_t j = 0; j < m; ++j) {
    state.capacities[j] = probs[j] / head_mass;
    state.thresholds[j] = stuffing * state.capacities[j];
    slack[j] = state.thresholds[j];
  }

  std::optional<CapacityTree> tree;
  if (engine == GreedyEngine::tree) tree.emplace(slack);

  std::vector<std::size_t> items_in(m, 0);
  std::size_t empty_bins = m;

  for (std::size_t i = 0; i < n; ++i) {
    if (mode == GreedyMode::strict && empty_bins == n - i) {
      // Largest remaining item into the smallest-index empty bin; the item's
      // rank in p is at least the bin index, so it fits under the threshold.
      std::size_t bin = 0;
      for (std::size_t k = i; k < n; ++k) {
        while (items_in[bin] != 0) ++bin;
        state.assignment[k] = bin;
        state.contents[bin] += probs[k];
        items_in[bin] = 1;
        ++bin;
      }
      state.items_placed = n;
      empty_bins = 0;
      break;
    }

    std::size_t j;
    if (engine == GreedyEngine::tree) {
      const auto found = tree->leftmost_feasible(probs[i]);
      if (!found) {
        fail(errc::infeasible_placement,
             "no bin can take item " + std::to_string(i) + " (invariant broken)");
      }
      j = *found;
      tree->consume(j, probs[i]);
    } else {
      j = scan_feasible(slack, probs[i]);
      if (j == m) {
        fail(errc::infeasible_placement,
             "no bin can take item " + std::to_string(i) + " (invariant broken)");
      }
    }
    slack[j] -= probs[i];

    state.assignment[i] = j;
    state.contents[j] += probs[i];
    if (items_in[j]++ == 0) --empty_bins;
    state.items_placed = i + 1;
    assert(state.contents[j] < state.thresholds[j]);
  }

  const Strictness flag =
      mode == GreedyMode::strict ? Strictness::strict : Strictness::relaxed;
  PartitionMap pm(state.assignment, m, flag);
  AggregationResult result = apply_partition(p, pm);
  attach_divergence(result, p);
  return result;
}

AggregationResult greedy_approx(const Distribution& p, std::size_t m, GreedyMode mode,
                                GreedyEngine engine) {
  GreedyState state;
  return greedy_approx(p, m, mode, engine, state);
}

}  // namespace klagg
