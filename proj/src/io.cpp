#include "io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "numeric.hpp"

namespace klagg {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Distribution parse_distribution(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});

  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
      fail(errc::io_error, "malformed JSON distribution");
    }
    std::vector<double> probs;
    probs.reserve(doc.size());
    for (const auto& v : doc) {
      if (!v.is_number()) fail(errc::io_error, "JSON distribution holds a non-number");
      probs.push_back(v.get<double>());
    }
    return Distribution(std::move(probs));
  }

  std::vector<double> probs;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream field(line.substr(start));
    double v;
    if (!(field >> v)) {
      fail(errc::io_error, "line " + std::to_string(lineno) + " is not a number");
    }
    std::string rest;
    if (field >> rest) {
      fail(errc::io_error, "line " + std::to_string(lineno) + " has trailing content");
    }
    probs.push_back(v);
  }
  return Distribution(std::move(probs));
}

Distribution read_distribution(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_distribution(in);
}

std::string format_distribution(const Distribution& d) {
  std::string out;
  out.reserve(d.size() * 20);
  for (double v : d.probs()) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

void write_distribution(const Distribution& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot write " + path);
  out << format_distribution(d);
  if (!out) fail(errc::io_error, "write failed for " + path);
}

ThreePartitionInstance parse_three_partition(std::istream& in) {
  long long m = 0, target = 0;
  if (!(in >> m >> target)) fail(errc::io_error, "expected header 'm T'");
  if (m < 1) fail(errc::malformed_instance, "m must be positive, got " + std::to_string(m));
  std::vector<long long> values;
  values.reserve(static_cast<std::size_t>(3 * m));
  for (long long i = 0; i < 3 * m; ++i) {
    long long v;
    if (!(in >> v)) fail(errc::io_error, "expected " + std::to_string(3 * m) + " values");
    values.push_back(v);
  }
  return ThreePartitionInstance(std::move(values), target);
}

ThreePartitionInstance read_three_partition(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_three_partition(in);
}

std::string format_three_partition(const ThreePartitionInstance& inst) {
  std::string out = std::to_string(inst.m()) + " " + std::to_string(inst.target()) + "\n";
  bool sep = false;
  for (long long v : inst.values()) {
    if (sep) out += ' ';
    out += std::to_string(v);
    sep = true;
  }
  out += '\n';
  return out;
}

}  // namespace klagg
