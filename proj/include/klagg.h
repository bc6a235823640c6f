/*
 * klagg - aggregation of discrete probability distributions with minimal
 * relative entropy (Kullback-Leibler divergence, base 2).
 *
 * Given an n-point distribution p and a target size m < n, the library
 * computes m-point aggregations of p (each output mass is a sum of a block
 * of input masses) that keep D(q || p) small:
 *
 *   - a greedy first-fit packer with a certified additive guarantee of one
 *     bit over the optimum, in O(n log m);
 *   - an exhaustive optimal solver for small n;
 *   - the closed-form divergence floor that every aggregation obeys;
 *   - an encoder that maps 3-partition instances onto distributions whose
 *     optimal aggregation value decides the instance (the problem is
 *     strongly NP-hard), plus certificate extraction and verification;
 *   - seeded experiment drivers: greedy-vs-optimal gap studies, scaling
 *     benchmarks and a per-instance invariant check suite.
 *
 * All functions return KLAGG_OK on success; on failure they return a status
 * code and leave a description in klagg_last_error() (thread-local). Objects
 * are opaque handles released with the matching *_free function. Handles are
 * immutable after creation and safe to share across threads.
 */

#ifndef KLAGG_H
#define KLAGG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum klagg_status {
  KLAGG_OK = 0,
  KLAGG_E_NONPOSITIVE_ENTRY = 1,
  KLAGG_E_NOT_NORMALIZED = 2,
  KLAGG_E_TOO_SHORT = 3,
  KLAGG_E_LENGTH_MISMATCH = 4,
  KLAGG_E_BLOCK_OUT_OF_RANGE = 5,
  KLAGG_E_EMPTY_BLOCK = 6,
  KLAGG_E_NEGATIVE_MASS = 7,
  KLAGG_E_BAD_M = 8,
  KLAGG_E_BAD_N = 9,
  KLAGG_E_BAD_EPSILON = 10,
  KLAGG_E_TOO_LARGE = 11,
  KLAGG_E_MALFORMED_INSTANCE = 12,
  KLAGG_E_CERTIFICATE_MISMATCH = 13,
  KLAGG_E_INFEASIBLE_PLACEMENT = 14,
  KLAGG_E_IO = 15,
  KLAGG_E_INVALID_ARGUMENT = 16,
  KLAGG_E_INTERNAL = 17
} klagg_status;

typedef enum klagg_mode {
  KLAGG_MODE_PAPER = 0, /* verbatim first-fit; blocks may end up empty */
  KLAGG_MODE_STRICT = 1 /* reserve rule guarantees every block nonempty */
} klagg_mode;

typedef enum klagg_engine {
  KLAGG_ENGINE_NAIVE = 0, /* linear scan per item, O(n m) */
  KLAGG_ENGINE_TREE = 1   /* slack segment tree, O(n log m) */
} klagg_engine;

typedef enum klagg_pairing {
  KLAGG_PAIRING_SORTED = 0, /* aggregate sorted descending before pairing */
  KLAGG_PAIRING_BIN = 1     /* block i against component i */
} klagg_pairing;

/* Static name of a status code, e.g. "not_normalized". */
const char* klagg_status_name(klagg_status status);

/* Message of the most recent failure on this thread; empty if none. */
const char* klagg_last_error(void);

/* Releases strings returned by the *_text/*_render functions. */
void klagg_string_free(char* text);

const char* klagg_version(void);

/* ------------------------------------------------------------------ */
/* Distributions                                                       */

typedef struct klagg_dist klagg_dist;

/* Validates probs (strictly positive, mass within 1e-9 of one, n >= 2),
 * sorts descending and rescales to unit mass. */
klagg_status klagg_dist_create(const double* probs, size_t n, klagg_dist** out);

/* Reads the canonical file format: one probability per line, '#' comments
 * and blank lines ignored; a JSON array is accepted as well. */
klagg_status klagg_dist_read(const char* path, klagg_dist** out);

/* Writes the canonical line format with 17 significant digits. */
klagg_status klagg_dist_write(const klagg_dist* d, const char* path);

/* Canonical text form; free with klagg_string_free. */
klagg_status klagg_dist_text(const klagg_dist* d, char** out);

size_t klagg_dist_size(const klagg_dist* d);

/* Copies the sorted probabilities into out (capacity n). */
klagg_status klagg_dist_probs(const klagg_dist* d, double* out, size_t capacity);

/* Copies the sort permutation: out[i] is the original index of sorted
 * component i. */
klagg_status klagg_dist_source_indices(const klagg_dist* d, size_t* out, size_t capacity);

void klagg_dist_free(klagg_dist* d);

/* Seeded uniform draw from the simplex (normalized exponentials). */
klagg_status klagg_dist_random(size_t n, uint64_t seed, klagg_dist** out);

/* The family (1/2-eps, 1/2-eps, 2eps), 0 < eps < 1/6, on which the greedy
 * gap approaches one bit. */
klagg_status klagg_dist_tightness(double epsilon, klagg_dist** out);

/* ------------------------------------------------------------------ */
/* Divergences                                                         */

/* sum q_i log2(q_i / p_ref_i) in bits; 0 log 0 := 0. q must carry unit
 * mass, p_ref must be strictly positive. */
klagg_status klagg_relative_entropy(const double* q, const double* p_ref, size_t len,
                                    double* bits);

/* -sum q_i log2 q_i in bits. */
klagg_status klagg_shannon_entropy(const double* q, size_t len, double* bits);

/* Divergence floor for m-point aggregations of d: value_bits =
 * -log2(mass of the m largest components). lb_out (capacity m) receives
 * those components renormalized; lb_out and prefix_mass may be NULL. */
klagg_status klagg_lower_bound(const klagg_dist* d, size_t m, double* lb_out,
                               double* value_bits, double* prefix_mass);

/* D(q || p[0..m)) - D(q || lb) - D(lb || p[0..m)); zero up to rounding. */
klagg_status klagg_decomposition_residual(const klagg_dist* d, const double* q, size_t m,
                                          double* bits);

/* ------------------------------------------------------------------ */
/* Reduction                                                           */

typedef struct klagg_result klagg_result;

klagg_status klagg_reduce_greedy(const klagg_dist* d, size_t m, klagg_mode mode,
                                 klagg_engine engine, klagg_result** out);

/* Exhaustive optimum; refused above n = 14 unless force is nonzero. */
klagg_status klagg_reduce_exact(const klagg_dist* d, size_t m, int force,
                                klagg_result** out);

size_t klagg_result_m(const klagg_result* r);

/* Per-block masses, block-index order (capacity m). */
klagg_status klagg_result_q(const klagg_result* r, double* out, size_t capacity);

/* Block assignment per component, in the caller's original input order
 * (capacity n). */
klagg_status klagg_result_blocks(const klagg_result* r, size_t* out, size_t capacity);

double klagg_result_divergence(const klagg_result* r, klagg_pairing pairing);

/* 1 when every block is nonempty. */
int klagg_result_is_strict(const klagg_result* r);

/* For exact results: partitions enumerated and exact ties of the minimum
 * (first in enumeration order is the one reported). Zero for greedy. */
uint64_t klagg_result_enumerated(const klagg_result* r);
uint64_t klagg_result_ties(const klagg_result* r);

void klagg_result_free(klagg_result* r);

/* Streams every partition of {0,..,n-1} into exactly m nonempty blocks
 * (restricted growth strings, lexicographic). The callback receives the
 * block label per element; returning nonzero stops early. count_out (may be
 * NULL) receives the number of partitions visited. n > 14 requires force. */
typedef int (*klagg_partition_cb)(const size_t* block_of, size_t n, void* user);
klagg_status klagg_enumerate_partitions(size_t n, size_t m, int force,
                                        klagg_partition_cb cb, void* user,
                                        uint64_t* count_out);

/* ------------------------------------------------------------------ */
/* 3-partition reduction                                               */

typedef struct klagg_tpi klagg_tpi;

/* 3m positive integers summing to m * target. */
klagg_status klagg_tpi_create(const long long* values, size_t count, long long target,
                              klagg_tpi** out);

/* File format: first line "m T", second line the 3m integers. */
klagg_status klagg_tpi_read(const char* path, klagg_tpi** out);

size_t klagg_tpi_m(const klagg_tpi* t);
long long klagg_tpi_target(const klagg_tpi* t);

/* Values sorted descending (capacity 3m). */
klagg_status klagg_tpi_values(const klagg_tpi* t, long long* out, size_t capacity);

void klagg_tpi_free(klagg_tpi* t);

/* Distribution with m head components 1/(m+1) followed by
 * (a_i + 2T)/((m+1) 7mT) per value. */
klagg_status klagg_tpi_encode(const klagg_tpi* t, klagg_dist** out);

/* log2((m+1)/m), the optimal value of encoded solvable instances; m >= 2. */
klagg_status klagg_target_value(size_t m, double* bits);

/* Decides by encoding and exhaustive search. yes_out receives 0/1. On yes,
 * triplets_out (capacity 3m, may be NULL) receives m groups of three indices
 * into the sorted values. opt_bits_out may be NULL. */
klagg_status klagg_tpi_decide(const klagg_tpi* t, int force, int* yes_out,
                              size_t* triplets_out, double* opt_bits_out);

/* ok_out receives 1 iff the 3m indices form disjoint covering triplets each
 * summing to the target. */
klagg_status klagg_tpi_verify(const klagg_tpi* t, const size_t* triplets, int* ok_out);

/* ------------------------------------------------------------------ */
/* Experiments                                                         */

typedef struct klagg_report klagg_report;

/* count seeded instances with n in [n_min, n_max] (n_max <= 14) and m in
 * [2, n-1]; compares greedy (both modes, both engines) against the
 * exhaustive optimum and checks every invariant in flight. */
klagg_status klagg_gap_bench(uint64_t count, size_t n_min, size_t n_max, uint64_t seed,
                             klagg_report** out);

/* Times the tree-engine greedy at each n (best of repeats). */
klagg_status klagg_scale_bench(const size_t* n_list, size_t n_count, size_t m,
                               uint64_t seed, int repeats, klagg_report** out);

/* Invariant check suite on one instance. */
klagg_status klagg_check(const klagg_dist* d, size_t m, int force_exact,
                         klagg_report** out);

size_t klagg_report_rows(const klagg_report* r);

/* Invariant violations (gap-bench) or failed checks (check); 0 for scale. */
uint64_t klagg_report_violations(const klagg_report* r);

/* Tab-separated table with '#'-prefixed header (human-readable lines for
 * check reports). Free with klagg_string_free. */
klagg_status klagg_report_text(const klagg_report* r, char** out);

/* Newline-delimited JSON, one record per line. */
klagg_status klagg_report_ndjson(const klagg_report* r, char** out);

void klagg_report_free(klagg_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KLAGG_H */
