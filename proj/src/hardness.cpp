#include "hardness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "errors.hpp"
#include "exact.hpp"

namespace klagg {

ThreePartitionInstance::ThreePartitionInstance(std::vector<long long> values,
                                               long long target)
    : values_(std::move(values)), target_(target) {
  if (values_.empty() || values_.size() % 3 != 0) {
    fail(errc::malformed_instance,
         "need 3m values, got " + std::to_string(values_.size()));
  }
  if (target_ < 1) {
    fail(errc::malformed_instance, "target must be positive, got " + std::to_string(target_));
  }
  long long sum = 0;
  for (long long v : values_) {
    if (v < 1) fail(errc::malformed_instance, "values must be positive, got " + std::to_string(v));
    if (__builtin_add_overflow(sum, v, &sum)) {
      fail(errc::too_large, "value sum overflows");
    }
  }
  const long long mm = static_cast<long long>(values_.size() / 3);
  if (sum != mm * target_) {
    fail(errc::malformed_instance, "values sum to " + std::to_string(sum) +
                                       ", expected m*T = " + std::to_string(mm * target_));
  }
  std::sort(values_.begin(), values_.end(), std::greater<long long>());
}

Distribution encode(const ThreePartitionInstance& inst) {
  const std::size_t m = inst.m();
  const long long t = inst.target();
  const auto values = inst.values();

  // Common denominator (m+1) * 7mT; the head numerator is 7mT, the tail
  // numerators a_i + 2T. Numerators sum to the denominator exactly.
  const __int128 head_num = static_cast<__int128>(7) * m * t;
  const __int128 denom = head_num * static_cast<__int128>(m + 1);
  if (denom > (static_cast<__int128>(1) << 62)) {
    fail(errc::too_large, "encoded denominator exceeds 2^62");
  }

  // Tail components must sit below the head ones so the encoded vector is
  // already descending; holds for every well-formed instance, checked anyway.
  if (static_cast<__int128>(values[0]) + 2 * t > head_num) {
    fail(errc::malformed_instance, "largest value breaks the encoding order");
  }

  const double denom_d = static_cast<double>(denom);
  std::vector<double> probs;
  probs.reserve(m + values.size());
  for (std::size_t j = 0; j < m; ++j) {
    probs.push_back(static_cast<double>(head_num) / denom_d);
  }
  for (long long a : values) {
    probs.push_back(static_cast<double>(a + 2 * t) / denom_d);
  }
  return Distribution(std::move(probs));
}

double target_value(std::size_t m) {
  if (m < 2) fail(errc::bad_m, "need m >= 2, got " + std::to_string(m));
  return std::log2(static_cast<double>(m + 1) / static_cast<double>(m));
}

DecideResult decide_by_oracle(const ThreePartitionInstance& inst, bool force) {
  const std::size_t m = inst.m();
  const std::size_t n_encoded = inst.values().size() + m;
  if (n_encoded > PartitionEnumerator::max_default_n && !force) {
    fail(errc::too_large, "encoded instance has " + std::to_string(n_encoded) +
                              " components, above the oracle cap (use force to override)");
  }

  const Distribution p = encode(inst);
  const ExactResult opt = exact_opt(p, m, force);

  DecideResult out;
  out.target_bits = target_value(m);
  out.opt_bits = opt.aggregation.divergence_bits;
  out.partitions_enumerated = opt.partitions_enumerated;

  constexpr double tol = 1e-9;
  if (out.opt_bits < out.target_bits - tol) {
    fail(errc::certificate_mismatch,
         "optimum fell below the achievable floor; solver defect");
  }
  if (out.opt_bits > out.target_bits + tol) {
    out.yes = false;
    return out;
  }

  // The optimum hit the floor: each block must hold exactly one head
  // component and three tail components summing to the target. blocks are
  // read in the encoding's input order (head first, then values descending).
  const auto& blocks = opt.aggregation.blocks_by_source;
  std::vector<std::size_t> head_count(m, 0);
  std::vector<std::vector<std::size_t>> tail_members(m);
  for (std::size_t i = 0; i < m; ++i) ++head_count[blocks[i]];
  for (std::size_t i = m; i < blocks.size(); ++i) tail_members[blocks[i]].push_back(i - m);

  std::vector<Triplet> certificate(m);
  for (std::size_t b = 0; b < m; ++b) {
    if (head_count[b] != 1 || tail_members[b].size() != 3) {
      fail(errc::certificate_mismatch,
           "optimal block " + std::to_string(b) + " is not head + three values");
    }
    certificate[b] = {tail_members[b][0], tail_members[b][1], tail_members[b][2]};
  }
  if (!verify_certificate(inst, certificate)) {
    fail(errc::certificate_mismatch, "extracted triplets do not sum to the target");
  }
  out.yes = true;
  out.certificate = std::move(certificate);
  return out;
}

bool verify_certificate(const ThreePartitionInstance& inst,
                        std::span<const Triplet> triplets) {
  const auto values = inst.values();
  const std::size_t n = values.size();
  if (triplets.size() != inst.m()) return false;

  std::vector<bool> used(n, false);
  for (const Triplet& t : triplets) {
    long long sum = 0;
    for (std::size_t idx : t) {
      if (idx >= n || used[idx]) return false;
      used[idx] = true;
      sum += values[idx];
    }
    if (sum != inst.target()) return false;
  }
  return true;  // all used: 3m slots filled without reuse
}

}  // namespace klagg
