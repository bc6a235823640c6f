#include "klagg.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "distribution.hpp"
#include "divergence.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "greedy.hpp"
#include "hardness.hpp"
#include "io.hpp"

namespace {

thread_local std::string g_last_error;

klagg_status map_errc(klagg::errc c) {
  using klagg::errc;
  switch (c) {
    case errc::none: return KLAGG_OK;
    case errc::non_positive_entry: return KLAGG_E_NONPOSITIVE_ENTRY;
    case errc::not_normalized: return KLAGG_E_NOT_NORMALIZED;
    case errc::too_short: return KLAGG_E_TOO_SHORT;
    case errc::length_mismatch: return KLAGG_E_LENGTH_MISMATCH;
    case errc::block_out_of_range: return KLAGG_E_BLOCK_OUT_OF_RANGE;
    case errc::empty_block: return KLAGG_E_EMPTY_BLOCK;
    case errc::negative_mass: return KLAGG_E_NEGATIVE_MASS;
    case errc::bad_m: return KLAGG_E_BAD_M;
    case errc::bad_n: return KLAGG_E_BAD_N;
    case errc::bad_epsilon: return KLAGG_E_BAD_EPSILON;
    case errc::too_large: return KLAGG_E_TOO_LARGE;
    case errc::malformed_instance: return KLAGG_E_MALFORMED_INSTANCE;
    case errc::certificate_mismatch: return KLAGG_E_CERTIFICATE_MISMATCH;
    case errc::infeasible_placement: return KLAGG_E_INFEASIBLE_PLACEMENT;
    case errc::io_error: return KLAGG_E_IO;
  }
  return KLAGG_E_INTERNAL;
}

template <typename Fn>
klagg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KLAGG_OK;
  } catch (const klagg::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KLAGG_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KLAGG_E_INTERNAL;
  }
}

klagg_status invalid(const char* what) {
  g_last_error = what;
  return KLAGG_E_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

enum class report_kind { gap, scale, check };

}  // namespace

struct klagg_dist {
  klagg::Distribution value;
};

struct klagg_result {
  klagg::AggregationResult value;
  uint64_t enumerated = 0;
  uint64_t ties = 0;
};

struct klagg_tpi {
  klagg::ThreePartitionInstance value;
};

struct klagg_report {
  report_kind kind;
  klagg::GapReport gap;
  klagg::ScaleReport scale;
  klagg::CheckReport check;
};

extern "C" {

const char* klagg_status_name(klagg_status status) {
  switch (status) {
    case KLAGG_OK: return "ok";
    case KLAGG_E_NONPOSITIVE_ENTRY: return "non_positive_entry";
    case KLAGG_E_NOT_NORMALIZED: return "not_normalized";
    case KLAGG_E_TOO_SHORT: return "too_short";
    case KLAGG_E_LENGTH_MISMATCH: return "length_mismatch";
    case KLAGG_E_BLOCK_OUT_OF_RANGE: return "block_out_of_range";
    case KLAGG_E_EMPTY_BLOCK: return "empty_block";
    case KLAGG_E_NEGATIVE_MASS: return "negative_mass";
    case KLAGG_E_BAD_M: return "bad_m";
    case KLAGG_E_BAD_N: return "bad_n";
    case KLAGG_E_BAD_EPSILON: return "bad_epsilon";
    case KLAGG_E_TOO_LARGE: return "too_large";
    case KLAGG_E_MALFORMED_INSTANCE: return "malformed_instance";
    case KLAGG_E_CERTIFICATE_MISMATCH: return "certificate_mismatch";
    case KLAGG_E_INFEASIBLE_PLACEMENT: return "infeasible_placement";
    case KLAGG_E_IO: return "io_error";
    case KLAGG_E_INVALID_ARGUMENT: return "invalid_argument";
    case KLAGG_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* klagg_last_error(void) { return g_last_error.c_str(); }

void klagg_string_free(char* text) { delete[] text; }

const char* klagg_version(void) { return "1.0.0"; }

/* ---------------- distributions ---------------- */

klagg_status klagg_dist_create(const double* probs, size_t n, klagg_dist** out) {
  if (!probs || !out) return invalid("null argument");
  return guarded([&] {
    *out = new klagg_dist{klagg::Distribution(std::vector<double>(probs, probs + n))};
  });
}

klagg_status klagg_dist_read(const char* path, klagg_dist** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new klagg_dist{klagg::read_distribution(path)}; });
}

klagg_status klagg_dist_write(const klagg_dist* d, const char* path) {
  if (!d || !path) return invalid("null argument");
  return guarded([&] { klagg::write_distribution(d->value, path); });
}

klagg_status klagg_dist_text(const klagg_dist* d, char** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] { *out = dup_string(klagg::format_distribution(d->value)); });
}

size_t klagg_dist_size(const klagg_dist* d) { return d ? d->value.size() : 0; }

klagg_status klagg_dist_probs(const klagg_dist* d, double* out, size_t capacity) {
  if (!d || !out) return invalid("null argument");
  if (capacity < d->value.size()) return invalid("capacity below n");
  const auto probs = d->value.probs();
  std::memcpy(out, probs.data(), probs.size() * sizeof(double));
  return KLAGG_OK;
}

klagg_status klagg_dist_source_indices(const klagg_dist* d, size_t* out, size_t capacity) {
  if (!d || !out) return invalid("null argument");
  if (capacity < d->value.size()) return invalid("capacity below n");
  const auto src = d->value.source_indices();
  std::memcpy(out, src.data(), src.size() * sizeof(size_t));
  return KLAGG_OK;
}

void klagg_dist_free(klagg_dist* d) { delete d; }

klagg_status klagg_dist_random(size_t n, uint64_t seed, klagg_dist** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new klagg_dist{klagg::random_distribution(n, seed)}; });
}

klagg_status klagg_dist_tightness(double epsilon, klagg_dist** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new klagg_dist{klagg::tightness_instance(epsilon)}; });
}

/* ---------------- divergences ---------------- */

klagg_status klagg_relative_entropy(const double* q, const double* p_ref, size_t len,
                                    double* bits) {
  if (!q || !p_ref || !bits) return invalid("null argument");
  return guarded([&] {
    *bits = klagg::relative_entropy(std::span(q, len), std::span(p_ref, len));
  });
}

klagg_status klagg_shannon_entropy(const double* q, size_t len, double* bits) {
  if (!q || !bits) return invalid("null argument");
  return guarded([&] { *bits = klagg::shannon_entropy(std::span(q, len)); });
}

klagg_status klagg_lower_bound(const klagg_dist* d, size_t m, double* lb_out,
                               double* value_bits, double* prefix_mass) {
  if (!d || !value_bits) return invalid("null argument");
  return guarded([&] {
    const klagg::LowerBound lb = klagg::lower_bound(d->value, m);
    *value_bits = lb.value_bits;
    if (prefix_mass) *prefix_mass = lb.prefix_mass;
    if (lb_out) std::memcpy(lb_out, lb.lb.data(), lb.lb.size() * sizeof(double));
  });
}

klagg_status klagg_decomposition_residual(const klagg_dist* d, const double* q, size_t m,
                                          double* bits) {
  if (!d || !q || !bits) return invalid("null argument");
  return guarded([&] { *bits = klagg::decomposition_residual(std::span(q, m), d->value); });
}

/* ---------------- reduction ---------------- */

klagg_status klagg_reduce_greedy(const klagg_dist* d, size_t m, klagg_mode mode,
                                 klagg_engine engine, klagg_result** out) {
  if (!d || !out) return invalid("null argument");
  if (mode != KLAGG_MODE_PAPER && mode != KLAGG_MODE_STRICT) return invalid("bad mode");
  if (engine != KLAGG_ENGINE_NAIVE && engine != KLAGG_ENGINE_TREE) return invalid("bad engine");
  return guarded([&] {
    auto result = klagg::greedy_approx(
        d->value, m,
        mode == KLAGG_MODE_PAPER ? klagg::GreedyMode::paper : klagg::GreedyMode::strict,
        engine == KLAGG_ENGINE_NAIVE ? klagg::GreedyEngine::naive
                                     : klagg::GreedyEngine::tree);
    *out = new klagg_result{std::move(result)};
  });
}

klagg_status klagg_reduce_exact(const klagg_dist* d, size_t m, int force,
                                klagg_result** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] {
    auto result = klagg::exact_opt(d->value, m, force != 0);
    *out = new klagg_result{std::move(result.aggregation), result.partitions_enumerated,
                            result.optima_ties};
  });
}

size_t klagg_result_m(const klagg_result* r) { return r ? r->value.q.size() : 0; }

klagg_status klagg_result_q(const klagg_result* r, double* out, size_t capacity) {
  if (!r || !out) return invalid("null argument");
  if (capacity < r->value.q.size()) return invalid("capacity below m");
  std::memcpy(out, r->value.q.data(), r->value.q.size() * sizeof(double));
  return KLAGG_OK;
}

klagg_status klagg_result_blocks(const klagg_result* r, size_t* out, size_t capacity) {
  if (!r || !out) return invalid("null argument");
  const auto& blocks = r->value.blocks_by_source;
  if (capacity < blocks.size()) return invalid("capacity below n");
  std::memcpy(out, blocks.data(), blocks.size() * sizeof(size_t));
  return KLAGG_OK;
}

double klagg_result_divergence(const klagg_result* r, klagg_pairing pairing) {
  if (!r) return 0.0;
  return pairing == KLAGG_PAIRING_BIN ? r->value.divergence_bin_bits
                                      : r->value.divergence_bits;
}

int klagg_result_is_strict(const klagg_result* r) {
  if (!r) return 0;
  for (double v : r->value.q) {
    if (!(v > 0.0)) return 0;
  }
  return 1;
}

uint64_t klagg_result_enumerated(const klagg_result* r) { return r ? r->enumerated : 0; }
uint64_t klagg_result_ties(const klagg_result* r) { return r ? r->ties : 0; }

void klagg_result_free(klagg_result* r) { delete r; }

klagg_status klagg_enumerate_partitions(size_t n, size_t m, int force,
                                        klagg_partition_cb cb, void* user,
                                        uint64_t* count_out) {
  if (!cb) return invalid("null callback");
  return guarded([&] {
    klagg::PartitionEnumerator en(n, m, force != 0);
    uint64_t count = 0;
    while (en.next()) {
      ++count;
      if (cb(en.labels().data(), n, user) != 0) break;
    }
    if (count_out) *count_out = count;
  });
}

/* ---------------- 3-partition ---------------- */

klagg_status klagg_tpi_create(const long long* values, size_t count, long long target,
                              klagg_tpi** out) {
  if (!values || !out) return invalid("null argument");
  return guarded([&] {
    *out = new klagg_tpi{klagg::ThreePartitionInstance(
        std::vector<long long>(values, values + count), target)};
  });
}

klagg_status klagg_tpi_read(const char* path, klagg_tpi** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new klagg_tpi{klagg::read_three_partition(path)}; });
}

size_t klagg_tpi_m(const klagg_tpi* t) { return t ? t->value.m() : 0; }

long long klagg_tpi_target(const klagg_tpi* t) { return t ? t->value.target() : 0; }

klagg_status klagg_tpi_values(const klagg_tpi* t, long long* out, size_t capacity) {
  if (!t || !out) return invalid("null argument");
  const auto values = t->value.values();
  if (capacity < values.size()) return invalid("capacity below 3m");
  std::memcpy(out, values.data(), values.size() * sizeof(long long));
  return KLAGG_OK;
}

void klagg_tpi_free(klagg_tpi* t) { delete t; }

klagg_status klagg_tpi_encode(const klagg_tpi* t, klagg_dist** out) {
  if (!t || !out) return invalid("null argument");
  return guarded([&] { *out = new klagg_dist{klagg::encode(t->value)}; });
}

klagg_status klagg_target_value(size_t m, double* bits) {
  if (!bits) return invalid("null argument");
  return guarded([&] { *bits = klagg::target_value(m); });
}

klagg_status klagg_tpi_decide(const klagg_tpi* t, int force, int* yes_out,
                              size_t* triplets_out, double* opt_bits_out) {
  if (!t || !yes_out) return invalid("null argument");
  return guarded([&] {
    const klagg::DecideResult res = klagg::decide_by_oracle(t->value, force != 0);
    *yes_out = res.yes ? 1 : 0;
    if (opt_bits_out) *opt_bits_out = res.opt_bits;
    if (res.yes && triplets_out) {
      size_t pos = 0;
      for (const klagg::Triplet& trip : *res.certificate) {
        for (size_t idx : trip) triplets_out[pos++] = idx;
      }
    }
  });
}

klagg_status klagg_tpi_verify(const klagg_tpi* t, const size_t* triplets, int* ok_out) {
  if (!t || !triplets || !ok_out) return invalid("null argument");
  return guarded([&] {
    const size_t m = t->value.m();
    std::vector<klagg::Triplet> groups(m);
    for (size_t j = 0; j < m; ++j) {
      groups[j] = {triplets[3 * j], triplets[3 * j + 1], triplets[3 * j + 2]};
    }
    *ok_out = klagg::verify_certificate(t->value, groups) ? 1 : 0;
  });
}

/* ---------------- experiments ---------------- */

klagg_status klagg_gap_bench(uint64_t count, size_t n_min, size_t n_max, uint64_t seed,
                             klagg_report** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    auto* r = new klagg_report{report_kind::gap, {}, {}, {}};
    r->gap = klagg::gap_experiment(klagg::GapParams{count, n_min, n_max, seed});
    *out = r;
  });
}

klagg_status klagg_scale_bench(const size_t* n_list, size_t n_count, size_t m,
                               uint64_t seed, int repeats, klagg_report** out) {
  if (!n_list || !out) return invalid("null argument");
  return guarded([&] {
    klagg::ScaleParams params;
    params.n_list.assign(n_list, n_list + n_count);
    params.m = m;
    params.seed = seed;
    params.repeats = repeats;
    auto* r = new klagg_report{report_kind::scale, {}, {}, {}};
    r->scale = klagg::scaling_benchmark(params);
    *out = r;
  });
}

klagg_status klagg_check(const klagg_dist* d, size_t m, int force_exact,
                         klagg_report** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] {
    auto* r = new klagg_report{report_kind::check, {}, {}, {}};
    r->check = klagg::check_instance(d->value, m, force_exact != 0);
    *out = r;
  });
}

size_t klagg_report_rows(const klagg_report* r) {
  if (!r) return 0;
  switch (r->kind) {
    case report_kind::gap: return r->gap.rows.size();
    case report_kind::scale: return r->scale.rows.size();
    case report_kind::check: return r->check.rows.size();
  }
  return 0;
}

uint64_t klagg_report_violations(const klagg_report* r) {
  if (!r) return 0;
  switch (r->kind) {
    case report_kind::gap: return r->gap.violations;
    case report_kind::scale: return 0;
    case report_kind::check: return r->check.failures;
  }
  return 0;
}

klagg_status klagg_report_text(const klagg_report* r, char** out) {
  if (!r || !out) return invalid("null argument");
  return guarded([&] {
    switch (r->kind) {
      case report_kind::gap: *out = dup_string(r->gap.to_tsv()); break;
      case report_kind::scale: *out = dup_string(r->scale.to_tsv()); break;
      case report_kind::check: *out = dup_string(r->check.to_text()); break;
    }
  });
}

klagg_status klagg_report_ndjson(const klagg_report* r, char** out) {
  if (!r || !out) return invalid("null argument");
  return guarded([&] {
    switch (r->kind) {
      case report_kind::gap: *out = dup_string(r->gap.to_ndjson()); break;
      case report_kind::scale: *out = dup_string(r->scale.to_ndjson()); break;
      case report_kind::check: *out = dup_string(r->check.to_ndjson()); break;
    }
  });
}

void klagg_report_free(klagg_report* r) { delete r; }

} /* extern "C" */
