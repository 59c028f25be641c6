#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "ap3/solution.hpp"
#include "cmcs/budget.hpp"
#include "cmcs/run_result.hpp"

namespace bench {

// One solver run on one instance. The assignment is written 1-based as
// [j, k] pairs indexed by i; trace stamps are application counts or
// microseconds depending on `result.stamp_unit`.
struct ResultRecord {
    std::string instance;
    std::string strategy;
    std::uint64_t seed = 0;
    cmcs::Budget budget{};
    cmcs::RunResult<ap3::Solution> result;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

std::string to_json(const ResultRecord& record);
ResultRecord result_from_json(const std::string& text);  // throws cmcs::IoError

void save_result(const std::filesystem::path& path, const ResultRecord& record);
ResultRecord load_result(const std::filesystem::path& path);

}  // namespace bench
