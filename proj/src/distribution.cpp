#include "distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

Distribution::Distribution(std::vector<double> raw) {
  if (raw.size() < 2) {
    fail(errc::too_short, "distribution needs at least 2 components, got " +
                              std::to_string(raw.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0.0) || !std::isfinite(raw[i])) {
      fail(errc::non_positive_entry,
           "component " + std::to_string(i) + " is not strictly positive: " +
               format_double(raw[i]));
    }
  }
  const double total = compensated_sum(raw);
  if (std::abs(total - 1.0) > normalization_tolerance) {
    fail(errc::not_normalized,
         "mass " + format_double(total) + " is outside 1 +/- 1e-9");
  }

  source_.resize(raw.size());
  std::iota(source_.begin(), source_.end(), std::size_t{0});
  std::stable_sort(source_.begin(), source_.end(),
                   [&raw](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });

  probs_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) probs_[i] = raw[source_[i]] / total;
}

double Distribution::prefix_mass(std::size_t m) const {
  KahanSum acc;
  for (std::size_t i = 0; i < m && i < probs_.size(); ++i) acc.add(probs_[i]);
  return acc.value();
}

}  // namespace klagg
