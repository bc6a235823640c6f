#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "divergence.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "greedy.hpp"
#include "numeric.hpp"

namespace klagg {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

bool overstuff_bound_holds(const std::vector<double>& q, const GreedyState& state) {
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (!(q[j] < state.thresholds[j])) return false;
  }
  return true;
}

}  // namespace

GapReport gap_experiment(const GapParams& params) {
  if (params.n_min < 3 || params.n_min > params.n_max) {
    fail(errc::bad_n, "need 3 <= n_min <= n_max");
  }
  if (params.n_max > PartitionEnumerator::max_default_n) {
    fail(errc::too_large, "n_max exceeds the exhaustive solver cap");
  }

  GapReport report;
  report.params = params;
  report.rows.reserve(params.count);

  KahanSum gap_total;
  for (std::uint64_t k = 0; k < params.count; ++k) {
    std::mt19937_64 rng(derive_seed(params.seed, k));
    const std::size_t n = bounded(rng, params.n_min, params.n_max);
    const std::size_t m = bounded(rng, 2, n - 1);
    const Distribution p = random_distribution(n, rng());

    const auto start = clock_type::now();
    const LowerBound lb = lower_bound(p, m);
    const ExactResult exact = exact_opt(p, m);

    GreedyState paper_naive, paper_tree, strict_naive, strict_tree;
    const auto g_pn = greedy_approx(p, m, GreedyMode::paper, GreedyEngine::naive, paper_naive);
    const auto g_pt = greedy_approx(p, m, GreedyMode::paper, GreedyEngine::tree, paper_tree);
    const auto g_sn = greedy_approx(p, m, GreedyMode::strict, GreedyEngine::naive, strict_naive);
    const auto g_st = greedy_approx(p, m, GreedyMode::strict, GreedyEngine::tree, strict_tree);

    GapRow row;
    row.index = k;
    row.n = n;
    row.m = m;
    row.lb_bits = lb.value_bits;
    row.opt_bits = exact.aggregation.divergence_bits;
    row.greedy_paper_bits = g_pt.divergence_bits;
    row.greedy_strict_bits = g_st.divergence_bits;
    row.gap_paper = row.greedy_paper_bits - row.opt_bits;
    row.gap_strict = row.greedy_strict_bits - row.opt_bits;

    bool ok = paper_naive.assignment == paper_tree.assignment &&
              strict_naive.assignment == strict_tree.assignment;
    ok = ok && overstuff_bound_holds(g_pt.q, paper_tree) &&
         overstuff_bound_holds(g_st.q, strict_tree);
    ok = ok && row.opt_bits >= row.lb_bits - 1e-9;
    ok = ok && row.gap_paper < 1.0 && row.gap_strict < 1.0;
    // The additive bound also holds for the direct bin pairing.
    ok = ok && g_pt.divergence_bin_bits - row.opt_bits < 1.0 &&
         g_st.divergence_bin_bits - row.opt_bits < 1.0;
    ok = ok && g_pn.divergence_bits == g_pt.divergence_bits &&
         g_sn.divergence_bits == g_st.divergence_bits;
    if (!ok) ++report.violations;

    row.wall_ms = elapsed_ms(start);
    const double worst = std::max(row.gap_paper, row.gap_strict);
    report.max_gap = std::max(report.max_gap, worst);
    gap_total.add(worst);
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) {
    report.mean_gap = gap_total.value() / static_cast<double>(report.rows.size());
  }
  return report;
}

std::string GapReport::to_tsv() const {
  std::string out;
  out += "# gap-bench count=" + std::to_string(params.count) +
         " n_min=" + std::to_string(params.n_min) + " n_max=" + std::to_string(params.n_max) +
         " seed=" + std::to_string(params.seed) + "\n";
  out += "# index\tn\tm\tlb_bits\topt_bits\tgreedy_paper_bits\tgreedy_strict_bits"
         "\tgap_paper\tgap_strict\twall_ms\n";
  for (const GapRow& r : rows) {
    out += std::to_string(r.index) + '\t' + std::to_string(r.n) + '\t' + std::to_string(r.m) +
           '\t' + format_double(r.lb_bits) + '\t' + format_double(r.opt_bits) + '\t' +
           format_double(r.greedy_paper_bits) + '\t' + format_double(r.greedy_strict_bits) +
           '\t' + format_double(r.gap_paper) + '\t' + format_double(r.gap_strict) + '\t' +
           format_double(r.wall_ms) + '\n';
  }
  out += "# violations\t" + std::to_string(violations) + "\n";
  out += "# max_gap\t" + format_double(max_gap) + "\n";
  out += "# mean_gap\t" + format_double(mean_gap) + "\n";
  return out;
}

std::string GapReport::to_ndjson() const {
  std::string out;
  for (const GapRow& r : rows) {
    nlohmann::json j{{"index", r.index},
                     {"n", r.n},
                     {"m", r.m},
                     {"lb_bits", r.lb_bits},
                     {"opt_bits", r.opt_bits},
                     {"greedy_paper_bits", r.greedy_paper_bits},
                     {"greedy_strict_bits", r.greedy_strict_bits},
                     {"gap_paper", r.gap_paper},
                     {"gap_strict", r.gap_strict},
                     {"wall_ms", r.wall_ms}};
    out += j.dump();
    out += '\n';
  }
  nlohmann::json tail{{"violations", violations}, {"max_gap", max_gap}, {"mean_gap", mean_gap}};
  out += tail.dump();
  out += '\n';
  return out;
}

GapReport GapReport::from_tsv(const std::string& text) {
  GapReport report;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tag;
      meta >> tag;
      if (tag == "gap-bench") {
        std::string kv;
        while (meta >> kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) continue;
          const std::string key = kv.substr(0, eq);
          const std::string val = kv.substr(eq + 1);
          if (key == "count") report.params.count = std::stoull(val);
          if (key == "n_min") report.params.n_min = std::stoul(val);
          if (key == "n_max") report.params.n_max = std::stoul(val);
          if (key == "seed") report.params.seed = std::stoull(val);
        }
      } else if (tag == "violations") {
        meta >> report.violations;
      } else if (tag == "max_gap") {
        meta >> report.max_gap;
      } else if (tag == "mean_gap") {
        meta >> report.mean_gap;
      }
      continue;
    }
    GapRow r;
    std::istringstream fields(line);
    if (!(fields >> r.index >> r.n >> r.m >> r.lb_bits >> r.opt_bits >> r.greedy_paper_bits >>
          r.greedy_strict_bits >> r.gap_paper >> r.gap_strict >> r.wall_ms)) {
      fail(errc::io_error, "malformed report row: " + line);
    }
    report.rows.push_back(r);
  }
  return report;
}

ScaleReport scaling_benchmark(const ScaleParams& params) {
  ScaleReport report;
  report.params = params;
  if (params.n_list.empty()) return report;
  const std::size_t n_min = *std::min_element(params.n_list.begin(), params.n_list.end());
  if (params.m < 1 || params.m >= n_min) {
    fail(errc::bad_m, "m must be below every benchmarked n");
  }
  if (params.repeats < 1) fail(errc::bad_n, "repeats must be positive");

  double prev = 0.0;
  for (std::size_t idx = 0; idx < params.n_list.size(); ++idx) {
    const std::size_t n = params.n_list[idx];
    const Distribution p = random_distribution(n, derive_seed(params.seed, idx));
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < params.repeats; ++r) {
      const auto start = clock_type::now();
      const auto result = greedy_approx(p, params.m, GreedyMode::strict, GreedyEngine::tree);
      best = std::min(best, elapsed_ms(start));
      (void)result;
    }
    ScaleRow row;
    row.n = n;
    row.best_ms = best;
    row.ratio = idx == 0 ? 0.0 : best / prev;
    prev = best;
    report.rows.push_back(row);
  }
  return report;
}

std::string ScaleReport::to_tsv() const {
  std::string out;
  out += "# scale-bench m=" + std::to_string(params.m) + " seed=" + std::to_string(params.seed) +
         " repeats=" + std::to_string(params.repeats) + "\n";
  out += "# n\tbest_ms\tratio\n";
  for (const ScaleRow& r : rows) {
    out += std::to_string(r.n) + '\t' + format_double(r.best_ms) + '\t' +
           (r.ratio == 0.0 ? std::string("-") : format_double(r.ratio)) + '\n';
  }
  return out;
}

std::string ScaleReport::to_ndjson() const {
  std::string out;
  for (const ScaleRow& r : rows) {
    nlohmann::json j{{"n", r.n}, {"best_ms", r.best_ms}};
    if (r.ratio != 0.0) j["ratio"] = r.ratio;
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

void push(CheckReport& rep, std::string name, bool pass, std::string detail) {
  if (!pass) ++rep.failures;
  rep.rows.push_back(CheckRow{std::move(name), pass, std::move(detail)});
}

}  // namespace

CheckReport check_instance(const Distribution& p, std::size_t m, bool force_exact) {
  CheckReport rep;
  const LowerBound lb = lower_bound(p, m);
  const double lb_mass = compensated_sum(lb.lb);
  push(rep, "lower_bound_valid", lb.value_bits >= 0.0 && std::abs(lb_mass - 1.0) <= 1e-12,
       "value_bits=" + format_double(lb.value_bits));

  struct ModeRun {
    const char* name;
    GreedyMode mode;
  };
  const ModeRun runs[] = {{"paper", GreedyMode::paper}, {"strict", GreedyMode::strict}};

  double greedy_bits[2] = {0.0, 0.0};
  for (int r = 0; r < 2; ++r) {
    const std::string tag = runs[r].name;
    GreedyState naive_state, tree_state;
    const auto naive = greedy_approx(p, m, runs[r].mode, GreedyEngine::naive, naive_state);
    const auto tree = greedy_approx(p, m, runs[r].mode, GreedyEngine::tree, tree_state);
    greedy_bits[r] = tree.divergence_bits;

    push(rep, "engines_match_" + tag, naive_state.assignment == tree_state.assignment,
         "naive and tree placements");
    push(rep, "all_items_placed_" + tag, tree_state.items_placed == p.size(),
         std::to_string(tree_state.items_placed) + " of " + std::to_string(p.size()));
    push(rep, "overstuff_bound_" + tag, overstuff_bound_holds(tree.q, tree_state),
         "every block below (1+S) * capacity");
    if (runs[r].mode == GreedyMode::strict) {
      const bool nonempty =
          std::all_of(tree.q.begin(), tree.q.end(), [](double v) { return v > 0.0; });
      push(rep, "strict_blocks_nonempty", nonempty, std::to_string(m) + " blocks");
    }
    const double vs_lb = relative_entropy(tree.q, lb.lb);
    const double bound = std::log2(1.0 + lb.prefix_mass);
    push(rep, "content_divergence_bound_" + tag, vs_lb < bound,
         format_double(vs_lb) + " < " + format_double(bound));
    const double residual = decomposition_residual(tree.q, p);
    push(rep, "decomposition_identity_" + tag, std::abs(residual) <= 1e-9,
         "residual=" + format_double(residual));
    push(rep, "pairing_order_" + tag,
         tree.divergence_bits <= tree.divergence_bin_bits + 1e-12,
         format_double(tree.divergence_bits) + " <= " + format_double(tree.divergence_bin_bits));
    push(rep, "divergence_floor_" + tag, tree.divergence_bits >= lb.value_bits - 1e-9,
         format_double(tree.divergence_bits) + " >= " + format_double(lb.value_bits));
  }

  if (p.size() <= PartitionEnumerator::max_default_n || force_exact) {
    const ExactResult exact = exact_opt(p, m, force_exact);
    const double opt = exact.aggregation.divergence_bits;
    push(rep, "exact_above_floor", opt >= lb.value_bits - 1e-9,
         format_double(opt) + " >= " + format_double(lb.value_bits));
    push(rep, "exact_below_greedy",
         opt <= greedy_bits[0] + 1e-12 && opt <= greedy_bits[1] + 1e-12,
         "opt_bits=" + format_double(opt));
    push(rep, "additive_gap_below_one",
         greedy_bits[0] - opt < 1.0 && greedy_bits[1] - opt < 1.0,
         "paper=" + format_double(greedy_bits[0] - opt) +
             " strict=" + format_double(greedy_bits[1] - opt));
  } else {
    push(rep, "exact_skipped_too_large", true,
         "n=" + std::to_string(p.size()) + " above enumeration cap");
  }
  return rep;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const CheckRow& r : rows) {
    out += r.pass ? "[PASS] " : "[FAIL] ";
    out += r.name;
    if (!r.detail.empty()) {
      out += ": ";
      out += r.detail;
    }
    out += '\n';
  }
  out += failures == 0 ? "all checks passed\n"
                       : std::to_string(failures) + " check(s) failed\n";
  return out;
}

std::string CheckReport::to_ndjson() const {
  std::string out;
  for (const CheckRow& r : rows) {
    nlohmann::json j{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace klagg
