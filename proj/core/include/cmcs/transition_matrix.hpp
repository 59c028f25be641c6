#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cmcs/rng.hpp"

namespace cmcs {

// Square row-stochastic matrix whose entries are multiples of 1/size.
// Numerators are stored; every row sums to size().
class TransitionMatrix {
public:
    TransitionMatrix() = default;

    // Valid placeholder: every row routes to column 0.
    explicit TransitionMatrix(std::size_t size);

    // Throws ContractViolation if the rows are not square, not non-negative,
    // or do not sum to the matrix size.
    static TransitionMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const { return size_; }
    int denominator() const { return static_cast<int>(size_); }

    int at(std::size_t row, std::size_t col) const { return cells_[row * size_ + col]; }
    int& at(std::size_t row, std::size_t col) { return cells_[row * size_ + col]; }

    std::span<const int> row(std::size_t r) const { return {cells_.data() + r * size_, size_}; }
    std::span<int> row(std::size_t r) { return {cells_.data() + r * size_, size_}; }

    std::vector<std::vector<int>> rows() const;

    bool is_valid() const;
    bool is_deterministic() const;

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<int> cells_;
};

// Returns a 0-based index i with probability row[i] / sum(row). Consumes
// exactly one draw from rng. Throws ContractViolation on an all-zero row.
std::size_t roulette_wheel(std::span<const int> numerators, Rng& rng);

}  // namespace cmcs
