#include "exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "divergence.hpp"
#include "errors.hpp"

namespace klagg {

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t m, bool force)
    : n_(n), m_(m) {
  if (n < 1) fail(errc::bad_n, "need at least one element");
  if (m < 1 || m > n) {
    fail(errc::bad_m,
         "m must satisfy 1 <= m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (n > max_default_n && !force) {
    fail(errc::too_large, "n=" + std::to_string(n) + " exceeds the enumeration cap " +
                              std::to_string(max_default_n) + " (use force to override)");
  }
  labels_.resize(n);
  prefix_max_.resize(n);
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    // Lexicographically first string with exactly m labels: zeros, then a
    // forced ascent 1..m-1 at the tail.
    const std::size_t ascent_start = n_ - (m_ - 1);
    for (std::size_t i = 0; i < n_; ++i) {
      labels_[i] = i < ascent_start ? 0 : i - ascent_start + 1;
      prefix_max_[i] = i == 0 ? labels_[0] : std::max(prefix_max_[i - 1], labels_[i]);
    }
    return true;
  }
  for (std::size_t i = n_ - 1; i >= 1; --i) {
    const std::size_t limit = std::min(prefix_max_[i - 1] + 1, m_ - 1);
    if (labels_[i] < limit) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        const std::size_t missing = (m_ - 1) - prefix_max_[j - 1];
        labels_[j] = missing == n_ - j ? prefix_max_[j - 1] + 1 : 0;
        prefix_max_[j] = std::max(prefix_max_[j - 1], labels_[j]);
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

ExactResult exact_opt(const Distribution& p, std::size_t m, bool force) {
  const std::size_t n = p.size();
  if (m < 1 || m >= n) {
    fail(errc::bad_m,
         "m must satisfy 1 <= m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  PartitionEnumerator en(n, m, force);

  const auto probs = p.probs();
  std::vector<double> head_log2(m);
  for (std::size_t i = 0; i < m; ++i) head_log2[i] = std::log2(probs[i]);

  std::vector<double> q(m), sorted_q(m);
  std::vector<std::size_t> best_labels;
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t count = 0, ties = 0;

  while (en.next()) {
    ++count;
    const auto labels = en.labels();
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) q[labels[i]] += probs[i];

    sorted_q.assign(q.begin(), q.end());
    // Insertion sort descending; m stays tiny here.
    for (std::size_t i = 1; i < m; ++i) {
      const double v = sorted_q[i];
      std::size_t j = i;
      while (j > 0 && sorted_q[j - 1] < v) {
        sorted_q[j] = sorted_q[j - 1];
        --j;
      }
      sorted_q[j] = v;
    }

    double d = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      d += sorted_q[i] * (std::log2(sorted_q[i]) - head_log2[i]);
    }

    if (d < best) {
      best = d;
      best_labels.assign(labels.begin(), labels.end());
      ties = 1;
    } else if (d == best) {
      ++ties;
    }
  }

  PartitionMap pm(std::move(best_labels), m, Strictness::strict);
  AggregationResult agg = apply_partition(p, pm);
  attach_divergence(agg, p);
  return ExactResult{std::move(agg), count, ties};
}

}  // namespace klagg
