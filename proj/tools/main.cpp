// Command-line front end; talks to the library through the C API only.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klagg.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

int report_failure(klagg_status status) {
  std::fprintf(stderr, "error: %s: %s\n", klagg_status_name(status), klagg_last_error());
  return exit_input;
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct DistHandle {
  klagg_dist* ptr = nullptr;
  ~DistHandle() { klagg_dist_free(ptr); }
};

struct ResultHandle {
  klagg_result* ptr = nullptr;
  ~ResultHandle() { klagg_result_free(ptr); }
};

struct TpiHandle {
  klagg_tpi* ptr = nullptr;
  ~TpiHandle() { klagg_tpi_free(ptr); }
};

struct ReportHandle {
  klagg_report* ptr = nullptr;
  ~ReportHandle() { klagg_report_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { klagg_string_free(ptr); }
};

int print_report(const klagg_report* report, bool json) {
  OwnedString text;
  const klagg_status st =
      json ? klagg_report_ndjson(report, &text.ptr) : klagg_report_text(report, &text.ptr);
  if (st != KLAGG_OK) return report_failure(st);
  std::fputs(text.ptr, stdout);
  return klagg_report_violations(report) == 0 ? exit_ok : exit_violation;
}

struct ReduceOptions {
  std::string input;
  std::size_t m = 0;
  std::string method = "greedy";
  std::string mode = "strict";
  std::string engine = "tree";
  std::string pairing = "sorted";
  bool force = false;
  bool json = false;
};

int run_reduce(const ReduceOptions& opt) {
  DistHandle dist;
  klagg_status st = klagg_dist_read(opt.input.c_str(), &dist.ptr);
  if (st != KLAGG_OK) return report_failure(st);
  const std::size_t n = klagg_dist_size(dist.ptr);

  double lb_bits = 0.0, prefix = 0.0;
  std::vector<double> lb(opt.m > 0 ? opt.m : 1);
  st = klagg_lower_bound(dist.ptr, opt.m, lb.data(), &lb_bits, &prefix);
  if (st != KLAGG_OK) return report_failure(st);

  if (opt.method == "lower-bound") {
    if (opt.json) {
      nlohmann::json j{{"method", "lower-bound"}, {"n", n},        {"m", opt.m},
                       {"value_bits", lb_bits},   {"lb", lb},      {"prefix_mass", prefix}};
      std::printf("%s\n", j.dump().c_str());
      return exit_ok;
    }
    std::printf("method        lower-bound\nn             %zu\nm             %zu\n", n, opt.m);
    std::printf("value_bits    %s\nprefix_mass   %s\n", fmt12(lb_bits).c_str(),
                fmt12(prefix).c_str());
    std::printf("lb           ");
    for (double v : lb) std::printf(" %s", fmt12(v).c_str());
    std::printf("\n");
    return exit_ok;
  }

  ResultHandle result;
  if (opt.method == "greedy") {
    const klagg_mode mode = opt.mode == "paper" ? KLAGG_MODE_PAPER : KLAGG_MODE_STRICT;
    const klagg_engine engine =
        opt.engine == "naive" ? KLAGG_ENGINE_NAIVE : KLAGG_ENGINE_TREE;
    st = klagg_reduce_greedy(dist.ptr, opt.m, mode, engine, &result.ptr);
  } else {
    st = klagg_reduce_exact(dist.ptr, opt.m, opt.force ? 1 : 0, &result.ptr);
  }
  if (st != KLAGG_OK) return report_failure(st);

  std::vector<double> q(opt.m);
  std::vector<std::size_t> blocks(n);
  if ((st = klagg_result_q(result.ptr, q.data(), q.size())) != KLAGG_OK ||
      (st = klagg_result_blocks(result.ptr, blocks.data(), blocks.size())) != KLAGG_OK) {
    return report_failure(st);
  }
  const double sorted_bits = klagg_result_divergence(result.ptr, KLAGG_PAIRING_SORTED);
  const double bin_bits = klagg_result_divergence(result.ptr, KLAGG_PAIRING_BIN);
  const double shown = opt.pairing == "bin" ? bin_bits : sorted_bits;

  if (opt.json) {
    nlohmann::json j{{"method", opt.method},
                     {"n", n},
                     {"m", opt.m},
                     {"pairing", opt.pairing},
                     {"divergence_bits", shown},
                     {"divergence_sorted_bits", sorted_bits},
                     {"divergence_bin_bits", bin_bits},
                     {"lower_bound_bits", lb_bits},
                     {"strict", klagg_result_is_strict(result.ptr) == 1},
                     {"q", q},
                     {"blocks", blocks}};
    if (opt.method == "greedy") {
      j["mode"] = opt.mode;
      j["engine"] = opt.engine;
    } else {
      j["enumerated"] = klagg_result_enumerated(result.ptr);
      j["ties"] = klagg_result_ties(result.ptr);
    }
    std::printf("%s\n", j.dump().c_str());
    return exit_ok;
  }

  std::printf("method            %s\n", opt.method.c_str());
  if (opt.method == "greedy") {
    std::printf("mode              %s\nengine            %s\n", opt.mode.c_str(),
                opt.engine.c_str());
  }
  std::printf("n                 %zu\nm                 %zu\n", n, opt.m);
  std::printf("pairing           %s\n", opt.pairing.c_str());
  std::printf("divergence_bits   %s\n", fmt12(shown).c_str());
  std::printf("divergence_bin    %s\n", fmt12(bin_bits).c_str());
  std::printf("lower_bound_bits  %s\n", fmt12(lb_bits).c_str());
  std::printf("strict            %s\n", klagg_result_is_strict(result.ptr) ? "yes" : "no");
  if (opt.method == "exact") {
    std::printf("enumerated        %" PRIu64 "\n", klagg_result_enumerated(result.ptr));
    std::printf("ties              %" PRIu64 "\n", klagg_result_ties(result.ptr));
  }
  std::printf("q                ");
  for (double v : q) std::printf(" %s", fmt12(v).c_str());
  std::printf("\nblocks           ");
  for (std::size_t b : blocks) std::printf(" %zu", b);
  std::printf("\n");
  return exit_ok;
}

int run_encode(const std::string& input, const std::string& output) {
  TpiHandle tpi;
  klagg_status st = klagg_tpi_read(input.c_str(), &tpi.ptr);
  if (st != KLAGG_OK) return report_failure(st);
  DistHandle dist;
  if ((st = klagg_tpi_encode(tpi.ptr, &dist.ptr)) != KLAGG_OK) return report_failure(st);
  if (output.empty()) {
    OwnedString text;
    if ((st = klagg_dist_text(dist.ptr, &text.ptr)) != KLAGG_OK) return report_failure(st);
    std::fputs(text.ptr, stdout);
  } else {
    if ((st = klagg_dist_write(dist.ptr, output.c_str())) != KLAGG_OK) {
      return report_failure(st);
    }
  }
  return exit_ok;
}

int run_decide(const std::string& input, bool force, bool json) {
  TpiHandle tpi;
  klagg_status st = klagg_tpi_read(input.c_str(), &tpi.ptr);
  if (st != KLAGG_OK) return report_failure(st);

  const std::size_t m = klagg_tpi_m(tpi.ptr);
  std::vector<long long> values(3 * m);
  klagg_tpi_values(tpi.ptr, values.data(), values.size());

  int yes = 0;
  double opt_bits = 0.0;
  std::vector<std::size_t> triplets(3 * m);
  st = klagg_tpi_decide(tpi.ptr, force ? 1 : 0, &yes, triplets.data(), &opt_bits);
  if (st != KLAGG_OK) return report_failure(st);
  double target_bits = 0.0;
  klagg_target_value(m, &target_bits);

  if (json) {
    nlohmann::json j{{"answer", yes ? "yes" : "no"},
                     {"m", m},
                     {"target", klagg_tpi_target(tpi.ptr)},
                     {"opt_bits", opt_bits},
                     {"target_bits", target_bits}};
    if (yes) {
      auto cert = nlohmann::json::array();
      for (std::size_t j3 = 0; j3 < m; ++j3) {
        cert.push_back({triplets[3 * j3], triplets[3 * j3 + 1], triplets[3 * j3 + 2]});
      }
      j["triplets"] = cert;
    }
    std::printf("%s\n", j.dump().c_str());
    return exit_ok;
  }

  std::printf("answer       %s\n", yes ? "yes" : "no");
  std::printf("opt_bits     %s\n", fmt12(opt_bits).c_str());
  std::printf("target_bits  %s\n", fmt12(target_bits).c_str());
  if (yes) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t a = triplets[3 * j], b = triplets[3 * j + 1], c = triplets[3 * j + 2];
      std::printf("triplet %zu    indices(%zu %zu %zu) values(%lld %lld %lld)\n", j, a, b, c,
                  values[a], values[b], values[c]);
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aggregate discrete probability distributions to fewer components while "
               "keeping the relative entropy to the original small (bits, base 2)"};
  app.require_subcommand(1);

  ReduceOptions reduce;
  auto* cmd_reduce = app.add_subcommand("reduce", "aggregate a distribution file to m blocks");
  cmd_reduce->add_option("--input", reduce.input, "distribution file")->required();
  cmd_reduce->add_option("--m", reduce.m, "number of output blocks")->required();
  cmd_reduce->add_option("--method", reduce.method, "solver")
      ->check(CLI::IsMember({"greedy", "exact", "lower-bound"}));
  cmd_reduce->add_option("--mode", reduce.mode, "greedy mode")
      ->check(CLI::IsMember({"paper", "strict"}));
  cmd_reduce->add_option("--engine", reduce.engine, "greedy engine")
      ->check(CLI::IsMember({"naive", "tree"}));
  cmd_reduce->add_option("--pairing", reduce.pairing, "reported pairing convention")
      ->check(CLI::IsMember({"sorted", "bin"}));
  cmd_reduce->add_flag("--force", reduce.force, "lift the exact solver size cap");
  cmd_reduce->add_flag("--json", reduce.json, "machine-readable output");

  std::string encode_input, encode_output;
  auto* cmd_encode =
      app.add_subcommand("encode-3part", "encode a 3-partition instance as a distribution");
  cmd_encode->add_option("--input", encode_input, "instance file: 'm T' then 3m integers")
      ->required();
  cmd_encode->add_option("--output", encode_output, "write here instead of stdout");

  std::string decide_input;
  bool decide_force = false, decide_json = false;
  auto* cmd_decide =
      app.add_subcommand("decide-3part", "decide a 3-partition instance via the encoding");
  cmd_decide->add_option("--input", decide_input, "instance file")->required();
  cmd_decide->add_flag("--force", decide_force, "lift the oracle size cap");
  cmd_decide->add_flag("--json", decide_json, "machine-readable output");

  std::uint64_t gap_count = 1000, gap_seed = 7;
  std::size_t gap_nmin = 4, gap_nmax = 10;
  bool gap_json = false;
  auto* cmd_gap = app.add_subcommand("gap-bench", "greedy vs exhaustive optimum gap study");
  cmd_gap->add_option("--count", gap_count, "instances to run");
  cmd_gap->add_option("--n-min", gap_nmin, "smallest n");
  cmd_gap->add_option("--n-max", gap_nmax, "largest n (<= 14)");
  cmd_gap->add_option("--seed", gap_seed, "experiment seed");
  cmd_gap->add_flag("--json", gap_json, "newline-delimited JSON output");

  std::vector<std::size_t> scale_n = {131072, 262144, 524288, 1048576};
  std::size_t scale_m = 1024;
  std::uint64_t scale_seed = 1;
  int scale_repeats = 3;
  bool scale_json = false;
  auto* cmd_scale = app.add_subcommand("scale-bench", "tree-engine greedy timing by n");
  cmd_scale->add_option("--m", scale_m, "number of bins");
  cmd_scale->add_option("--n", scale_n, "sizes to time");
  cmd_scale->add_option("--seed", scale_seed, "instance seed");
  cmd_scale->add_option("--repeats", scale_repeats, "runs per size, best kept");
  cmd_scale->add_flag("--json", scale_json, "newline-delimited JSON output");

  std::string check_input;
  std::size_t check_m = 0;
  bool check_force = false, check_json = false;
  auto* cmd_check = app.add_subcommand("check", "run the invariant suite on one instance");
  cmd_check->add_option("--input", check_input, "distribution file")->required();
  cmd_check->add_option("--m", check_m, "number of output blocks")->required();
  cmd_check->add_flag("--force", check_force, "run the exhaustive solver past its cap");
  cmd_check->add_flag("--json", check_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  if (cmd_reduce->parsed()) return run_reduce(reduce);
  if (cmd_encode->parsed()) return run_encode(encode_input, encode_output);
  if (cmd_decide->parsed()) return run_decide(decide_input, decide_force, decide_json);

  if (cmd_gap->parsed()) {
    ReportHandle report;
    const klagg_status st =
        klagg_gap_bench(gap_count, gap_nmin, gap_nmax, gap_seed, &report.ptr);
    if (st != KLAGG_OK) return report_failure(st);
    return print_report(report.ptr, gap_json);
  }

  if (cmd_scale->parsed()) {
    ReportHandle report;
    const klagg_status st = klagg_scale_bench(scale_n.data(), scale_n.size(), scale_m,
                                              scale_seed, scale_repeats, &report.ptr);
    if (st != KLAGG_OK) return report_failure(st);
    return print_report(report.ptr, scale_json);
  }

  if (cmd_check->parsed()) {
    DistHandle dist;
    klagg_status st = klagg_dist_read(check_input.c_str(), &dist.ptr);
    if (st != KLAGG_OK) return report_failure(st);
    ReportHandle report;
    st = klagg_check(dist.ptr, check_m, check_force ? 1 : 0, &report.ptr);
    if (st != KLAGG_OK) return report_failure(st);
    return print_report(report.ptr, check_json);
  }

  return exit_input;
}
