#pragma once

#include <iosfwd>
#include <string>

#include "distribution.hpp"
#include "hardness.hpp"

namespace klagg {

// Canonical distribution file: one probability per line, '#' comments and
// blank lines ignored. A file whose first token opens a JSON array is parsed
// as one instead. Writers always emit the line form with 17 significant
// digits.
Distribution read_distribution(const std::string& path);
Distribution parse_distribution(std::istream& in);
std::string format_distribution(const Distribution& d);
void write_distribution(const Distribution& d, const std::string& path);

// Instance file: first line "m T", second line the 3m integers.
ThreePartitionInstance read_three_partition(const std::string& path);
ThreePartitionInstance parse_three_partition(std::istream& in);
std::string format_three_partition(const ThreePartitionInstance& inst);

}  // namespace klagg
