#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ap3/instance.hpp"

namespace ap3 {

// Text format:
//   AP3 <n> <family> <seed>
//   n blocks separated by blank lines; block i holds n lines, line j lists
//   c(i, j, k) for k = 1..n separated by single spaces.
// Lines starting with '#' are comments. Throws cmcs::IoError on malformed
// input.
void write_instance(std::ostream& os, const Instance& inst);
Instance read_instance(std::istream& is, std::string name = {});

// The instance name defaults to the file stem.
void save_instance(const std::filesystem::path& path, const Instance& inst);
Instance load_instance(const std::filesystem::path& path);

}  // namespace ap3
