#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ap3/instance.hpp"

namespace ap3 {

struct LapResult {
    std::vector<int> row_to_col;  // a permutation
    Cost cost = 0;
};

// Minimum-cost perfect matching of a square row-major n x n matrix, via the
// Hungarian method with row/column potentials. O(n^3).
LapResult solve_lap(std::span<const Cost> matrix, std::size_t n);

// Same, for nested rows. Throws ContractViolation unless the input is square.
LapResult solve_lap(const std::vector<std::vector<Cost>>& matrix);

}  // namespace ap3
