#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "cmcs/budget.hpp"
#include "cmcs/component.hpp"

namespace bench {

// Best-known objective per instance name, used as the reference for
// solution error percentages.
struct BaselineTable {
    std::string method;
    cmcs::Budget budget{};
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::map<std::string, cmcs::Objective> entries;

    // Throws cmcs::ContractViolation if `name` has no entry.
    cmcs::Objective at(const std::string& name) const;

    // Keeps the smaller of the existing and the new objective.
    void update(const std::string& name, cmcs::Objective objective);

    friend bool operator==(const BaselineTable&, const BaselineTable&) = default;
};

std::string to_json(const BaselineTable& table);
BaselineTable baseline_from_json(const std::string& text);  // throws cmcs::IoError

void save_baseline(const std::filesystem::path& path, const BaselineTable& table);
BaselineTable load_baseline(const std::filesystem::path& path);

// 100 * (f - f_ref) / f_ref.
double error_percent(cmcs::Objective f, cmcs::Objective reference);

}  // namespace bench
