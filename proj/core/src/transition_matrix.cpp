#include "cmcs/transition_matrix.hpp"

#include <numeric>
#include <string>

#include "cmcs/errors.hpp"

namespace cmcs {

TransitionMatrix::TransitionMatrix(std::size_t size) : size_(size), cells_(size * size, 0) {
    for (std::size_t r = 0; r < size; ++r) cells_[r * size] = static_cast<int>(size);
}

TransitionMatrix TransitionMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    TransitionMatrix m;
    m.size_ = rows.size();
    m.cells_.reserve(m.size_ * m.size_);
    for (const auto& row : rows) {
        require(row.size() == m.size_, "transition matrix must be square");
        m.cells_.insert(m.cells_.end(), row.begin(), row.end());
    }
    require(m.size_ > 0, "transition matrix must not be empty");
    require(m.is_valid(), "transition matrix rows must be non-negative and sum to " +
                              std::to_string(m.size_));
    return m;
}

std::vector<std::vector<int>> TransitionMatrix::rows() const {
    std::vector<std::vector<int>> out(size_);
    for (std::size_t r = 0; r < size_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

bool TransitionMatrix::is_valid() const {
    if (size_ == 0 || cells_.size() != size_ * size_) return false;
    for (std::size_t r = 0; r < size_; ++r) {
        int sum = 0;
        for (int v : row(r)) {
            if (v < 0 || v > static_cast<int>(size_)) return false;
            sum += v;
        }
        if (sum != static_cast<int>(size_)) return false;
    }
    return true;
}

bool TransitionMatrix::is_deterministic() const {
    for (std::size_t r = 0; r < size_; ++r) {
        int nonzero = 0;
        for (int v : row(r)) nonzero += v != 0;
        if (nonzero != 1) return false;
    }
    return true;
}

std::size_t roulette_wheel(std::span<const int> numerators, Rng& rng) {
    const int total = std::accumulate(numerators.begin(), numerators.end(), 0);
    require(total > 0, "roulette wheel over an all-zero row");
    const auto draw = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(total)));
    int cumulative = 0;
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        cumulative += numerators[i];
        if (draw < cumulative) return i;
    }
    return numerators.size() - 1;  // unreachable for valid rows
}

}  // namespace cmcs
