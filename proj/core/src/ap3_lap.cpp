#include "ap3/lap.hpp"

#include <algorithm>
#include <limits>

#include "cmcs/errors.hpp"

namespace ap3 {

LapResult solve_lap(std::span<const Cost> matrix, std::size_t n) {
    cmcs::require(matrix.size() == n * n, "LAP matrix must be square");
    LapResult result;
    if (n == 0) return result;

    // Shortest augmenting paths with potentials; arrays are 1-based with
    // column 0 acting as the virtual source.
    constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
    std::vector<Cost> u(n + 1, 0), v(n + 1, 0), min_slack(n + 1);
    std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    auto a = [&](std::size_t r, std::size_t c) { return matrix[(r - 1) * n + (c - 1)]; };

    for (std::size_t row = 1; row <= n; ++row) {
        row_of[0] = row;
        std::size_t col0 = 0;
        std::fill(min_slack.begin(), min_slack.end(), kInf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[col0] = 1;
            const std::size_t r0 = row_of[col0];
            Cost delta = kInf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= n; ++c) {
                if (used[c]) continue;
                const Cost cur = a(r0, c) - u[r0] - v[c];
                if (cur < min_slack[c]) {
                    min_slack[c] = cur;
                    way[c] = col0;
                }
                if (min_slack[c] < delta) {
                    delta = min_slack[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= n; ++c) {
                if (used[c]) {
                    u[row_of[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_slack[c] -= delta;
                }
            }
            col0 = col1;
        } while (row_of[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            row_of[col0] = row_of[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    result.row_to_col.assign(n, 0);
    for (std::size_t c = 1; c <= n; ++c) result.row_to_col[row_of[c] - 1] = static_cast<int>(c - 1);
    for (std::size_t r = 0; r < n; ++r) result.cost += matrix[r * n + result.row_to_col[r]];
    return result;
}

LapResult solve_lap(const std::vector<std::vector<Cost>>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<Cost> flat;
    flat.reserve(n * n);
    for (const auto& row : matrix) {
        cmcs::require(row.size() == n, "LAP matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return solve_lap(flat, n);
}

}  // namespace ap3
