#include "generators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

Distribution random_distribution(std::size_t n, std::uint64_t seed) {
  if (n < 2) fail(errc::bad_n, "need n >= 2, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::vector<double> draws(n);
  KahanSum total;
  for (std::size_t i = 0; i < n; ++i) {
    // (0,1) strictly, so the exponential variate is strictly positive.
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
    draws[i] = -std::log(u);
    total.add(draws[i]);
  }
  const double mass = total.value();
  for (double& d : draws) d /= mass;
  return Distribution(std::move(draws));
}

Distribution tightness_instance(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / 6.0)) {
    fail(errc::bad_epsilon,
         "epsilon must lie in (0, 1/6), got " + format_double(epsilon));
  }
  return Distribution({0.5 - epsilon, 0.5 - epsilon, 2.0 * epsilon});
}

}  // namespace klagg
