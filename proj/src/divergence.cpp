#include "divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

namespace {

constexpr double negative_mass_tolerance = 1e-15;

// Shared entry checks: clamps rounding-level negatives to zero, rejects
// anything more negative, and requires unit mass.
double checked_mass(std::span<const double> q, std::vector<double>& cleaned) {
  cleaned.assign(q.begin(), q.end());
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (cleaned[i] < 0.0) {
      if (cleaned[i] < -negative_mass_tolerance) {
        fail(errc::negative_mass,
             "component " + std::to_string(i) + " is negative: " + format_double(cleaned[i]));
      }
      cleaned[i] = 0.0;
    }
  }
  const double total = compensated_sum(cleaned);
  if (std::abs(total - 1.0) > Distribution::normalization_tolerance) {
    fail(errc::not_normalized, "mass " + format_double(total) + " is outside 1 +/- 1e-9");
  }
  return total;
}

// log2(q) - log2(p) keeps terms finite even for denormal reference values,
// where forming q/p first could overflow.
double kl_term(double q, double p) noexcept {
  return q > 0.0 ? q * (std::log2(q) - std::log2(p)) : 0.0;
}

}  // namespace

double relative_entropy(std::span<const double> q, std::span<const double> p_ref) {
  if (q.size() != p_ref.size()) {
    fail(errc::length_mismatch, "q has " + std::to_string(q.size()) + " components, p_ref has " +
                                    std::to_string(p_ref.size()));
  }
  if (q.empty()) fail(errc::length_mismatch, "empty vectors");
  for (std::size_t i = 0; i < p_ref.size(); ++i) {
    if (!(p_ref[i] > 0.0)) {
      fail(errc::non_positive_entry, "reference component " + std::to_string(i) +
                                         " is not strictly positive: " +
                                         format_double(p_ref[i]));
    }
  }
  std::vector<double> cleaned;
  checked_mass(q, cleaned);

  KahanSum acc;
  for (std::size_t i = 0; i < cleaned.size(); ++i) acc.add(kl_term(cleaned[i], p_ref[i]));
  return acc.value();
}

double shannon_entropy(std::span<const double> q) {
  if (q.empty()) fail(errc::length_mismatch, "empty vector");
  std::vector<double> cleaned;
  checked_mass(q, cleaned);

  KahanSum acc;
  for (double v : cleaned) {
    if (v > 0.0) acc.add(-v * std::log2(v));
  }
  return acc.value();
}

LowerBound lower_bound(const Distribution& p, std::size_t m) {
  if (m < 1 || m >= p.size()) {
    fail(errc::bad_m, "m must satisfy 1 <= m < n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(p.size()));
  }
  LowerBound out;
  out.prefix_mass = p.prefix_mass(m);
  out.lb.resize(m);
  const auto probs = p.probs();
  for (std::size_t i = 0; i < m; ++i) out.lb[i] = probs[i] / out.prefix_mass;
  out.value_bits = -std::log2(out.prefix_mass);
  return out;
}

double decomposition_residual(std::span<const double> q, const Distribution& p) {
  const std::size_t m = q.size();
  const LowerBound lb = lower_bound(p, m);
  const auto head = p.probs().subspan(0, m);
  const double against_p = relative_entropy(q, head);
  const double against_lb = relative_entropy(q, lb.lb);
  const double lb_against_p = relative_entropy(lb.lb, head);
  return against_p - against_lb - lb_against_p;
}

double aggregation_divergence(std::span<const double> q, const Distribution& p,
                              Pairing pairing) {
  const std::size_t m = q.size();
  if (m >= p.size()) {
    fail(errc::bad_m, "aggregate has " + std::to_string(m) +
                          " blocks, distribution only " + std::to_string(p.size()) +
                          " components");
  }
  const auto head = p.probs().subspan(0, m);
  if (pairing == Pairing::bin_index) return relative_entropy(q, head);
  std::vector<double> sorted(q.begin(), q.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  return relative_entropy(sorted, head);
}

void attach_divergence(AggregationResult& r, const Distribution& p) {
  r.divergence_bits = aggregation_divergence(r.q, p, Pairing::sorted_canonical);
  r.divergence_bin_bits = aggregation_divergence(r.q, p, Pairing::bin_index);
  r.pairing = Pairing::sorted_canonical;
}

}  // namespace klagg
