#pragma once

#include <stdexcept>
#include <string>

namespace klagg {

enum class errc {
  none = 0,
  non_positive_entry,
  not_normalized,
  too_short,
  length_mismatch,
  block_out_of_range,
  empty_block,
  negative_mass,
  bad_m,
  bad_n,
  bad_epsilon,
  too_large,
  malformed_instance,
  certificate_mismatch,
  infeasible_placement,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::none: return "ok";
    case errc::non_positive_entry: return "non_positive_entry";
    case errc::not_normalized: return "not_normalized";
    case errc::too_short: return "too_short";
    case errc::length_mismatch: return "length_mismatch";
    case errc::block_out_of_range: return "block_out_of_range";
    case errc::empty_block: return "empty_block";
    case errc::negative_mass: return "negative_mass";
    case errc::bad_m: return "bad_m";
    case errc::bad_n: return "bad_n";
    case errc::bad_epsilon: return "bad_epsilon";
    case errc::too_large: return "too_large";
    case errc::malformed_instance: return "malformed_instance";
    case errc::certificate_mismatch: return "certificate_mismatch";
    case errc::infeasible_placement: return "infeasible_placement";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace klagg
