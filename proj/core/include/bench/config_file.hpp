#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cmcs/budget.hpp"
#include "cmcs/config.hpp"

namespace bench {

inline constexpr const char* kToolVersion = "1.0.0";

struct Provenance {
    std::string tool_version = kToolVersion;
    std::uint64_t seed = 0;
    cmcs::Budget per_run_budget{};
    std::string matrix_search;  // "generations:<g>" or "ms:<t>"
    std::string scoring;
    std::vector<std::string> pool;
    std::size_t subset_size = 0;
    std::string notes;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

// A trained (or hand-written) configuration. JSON layout:
//   {"strategy", "components", "denominator", "m_succ", "m_fail",
//    "vnd", "vnd_threshold"              (B only)
//    "split", "sub1", "sub2"             (C; sub-objects hold the
//                                         components/denominator/matrices)
//    "provenance"}
// Matrices are stored as integer numerators over `denominator` = |H|.
struct ConfigFile {
    cmcs::SolverSpec spec;
    Provenance provenance;
};

std::string to_json(const ConfigFile& file);
ConfigFile config_from_json(const std::string& text);  // throws cmcs::IoError

void save_config(const std::filesystem::path& path, const ConfigFile& file);
ConfigFile load_config(const std::filesystem::path& path);

// Whole-file helpers shared by the other formats.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace bench
