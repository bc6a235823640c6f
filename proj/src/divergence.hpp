#pragma once

#include <span>
#include <vector>

#include "distribution.hpp"
#include "partition.hpp"

namespace klagg {

// The m largest components of p renormalized by their total mass. Its
// divergence against those components, -log2(prefix_mass), lower-bounds the
// divergence of every m-point distribution paired with them.
struct LowerBound {
  std::vector<double> lb;
  double value_bits = 0.0;
  double prefix_mass = 0.0;
};

// sum_i q_i log2(q_i / p_ref_i) in bits, index-wise pairing, with
// 0 log 0 := 0 so vectors with empty blocks are admissible.
double relative_entropy(std::span<const double> q, std::span<const double> p_ref);

// -sum_i q_i log2(q_i) in bits, same zero convention.
double shannon_entropy(std::span<const double> q);

LowerBound lower_bound(const Distribution& p, std::size_t m);

// D(q || p[0..m)) - D(q || lb(p)) - D(lb(p) || p[0..m)); identically zero up
// to rounding, kept as a checkable quantity.
double decomposition_residual(std::span<const double> q, const Distribution& p);

// Divergence of an aggregated vector against the leading components of p
// under the requested pairing convention.
double aggregation_divergence(std::span<const double> q, const Distribution& p,
                              Pairing pairing);

// Fills both divergence fields of an aggregation. The canonical value uses
// the sorted pairing, which is never larger than the bin-index value.
void attach_divergence(AggregationResult& r, const Distribution& p);

}  // namespace klagg
