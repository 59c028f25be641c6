#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmcs/budget.hpp"
#include "cmcs/component.hpp"

namespace cmcs {

struct TracePoint {
    std::int64_t stamp = 0;  // applications or microseconds, see RunResult::stamp_unit
    Objective objective = 0;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

// How often the chain moved from component `from` to `to` after a
// successful / failed application.
struct TransitionCounts {
    std::size_t size = 0;
    std::vector<std::uint64_t> succ;
    std::vector<std::uint64_t> fail;

    TransitionCounts() = default;
    explicit TransitionCounts(std::size_t n) : size(n), succ(n * n, 0), fail(n * n, 0) {}

    void add(std::size_t from, std::size_t to, bool improved) {
        (improved ? succ : fail)[from * size + to] += 1;
    }
    std::uint64_t at(std::size_t from, std::size_t to, bool improved) const {
        return (improved ? succ : fail)[from * size + to];
    }

    friend bool operator==(const TransitionCounts&, const TransitionCounts&) = default;
};

template <class Solution>
struct RunResult {
    Solution best_solution{};
    Objective best_objective = 0;
    // Starts with the initial objective at stamp 0, then one point per
    // strict improvement of the best objective.
    std::vector<TracePoint> trace;
    std::int64_t iterations_executed = 0;
    BudgetMode stamp_unit = BudgetMode::iterations;
    // One table per executed chain phase (two for Strategy C).
    std::vector<TransitionCounts> transitions;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

}  // namespace cmcs
