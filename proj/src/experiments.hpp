#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distribution.hpp"

namespace klagg {

struct GapParams {
  std::uint64_t count = 1000;
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  std::uint64_t seed = 7;
};

struct GapRow {
  std::uint64_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double lb_bits = 0.0;
  double opt_bits = 0.0;
  double greedy_paper_bits = 0.0;
  double greedy_strict_bits = 0.0;
  double gap_paper = 0.0;
  double gap_strict = 0.0;
  double wall_ms = 0.0;
};

// One exhaustive-vs-greedy comparison per seeded instance. Every row is also
// checked in flight: engines must agree, the overstuffing bound must hold
// per bin, the optimum must sit between the floor and both greedy values,
// and each gap must stay below one bit. Failures are counted, not thrown.
struct GapReport {
  GapParams params;
  std::vector<GapRow> rows;
  std::uint64_t violations = 0;
  double max_gap = 0.0;
  double mean_gap = 0.0;

  std::string to_tsv() const;
  std::string to_ndjson() const;
  static GapReport from_tsv(const std::string& text);
};

GapReport gap_experiment(const GapParams& params);

struct ScaleParams {
  std::vector<std::size_t> n_list;
  std::size_t m = 1024;
  std::uint64_t seed = 1;
  int repeats = 3;
};

struct ScaleRow {
  std::size_t n = 0;
  double best_ms = 0.0;
  double ratio = 0.0;  // best_ms over the previous row's; 0 for the first
};

struct ScaleReport {
  ScaleParams params;
  std::vector<ScaleRow> rows;

  std::string to_tsv() const;
  std::string to_ndjson() const;
};

// Times the tree-engine greedy per size, best of `repeats` runs; instance
// generation is excluded from the clock.
ScaleReport scaling_benchmark(const ScaleParams& params);

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckRow> rows;
  std::uint64_t failures = 0;

  std::string to_text() const;
  std::string to_ndjson() const;
};

// Runs the invariant suite against one instance: engine agreement, the
// per-bin overstuffing bound, placement soundness, the divergence
// decomposition identity, pairing order, the divergence floor, and (when the
// instance is small enough or force is set) the additive-one gap against the
// exhaustive optimum.
CheckReport check_instance(const Distribution& p, std::size_t m, bool force_exact = false);

}  // namespace klagg
