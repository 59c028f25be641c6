#include "cmcs/matrix_mutation.hpp"

#include <algorithm>
#include <utility>

#include "cmcs/errors.hpp"

namespace cmcs {

std::string_view to_string(MatrixMutation op) {
    switch (op) {
    case MatrixMutation::swap_rows:
        return "swap-rows";
    case MatrixMutation::shuffle_row:
        return "shuffle-row";
    case MatrixMutation::minimum_change:
        return "minimum-change";
    case MatrixMutation::ruin_and_recreate:
        return "ruin-and-recreate";
    case MatrixMutation::void_op:
        return "void";
    }
    return "?";
}

TransitionMatrix random_deterministic_matrix(std::size_t size, Rng& rng) {
    require(size >= 1, "matrix size must be at least 1");
    TransitionMatrix m(size);
    for (std::size_t r = 0; r < size; ++r) {
        auto row = m.row(r);
        std::fill(row.begin(), row.end(), 0);
        row[uniform_index(rng, size)] = static_cast<int>(size);
    }
    return m;
}

void minimum_change(TransitionMatrix& m, std::size_t row, std::size_t give, std::size_t take) {
    if (give == take) return;
    int& up = m.at(row, give);
    int& down = m.at(row, take);
    if (up >= m.denominator() || down <= 0) return;
    ++up;
    --down;
}

namespace {

// Two distinct uniform indices in [0, n), n >= 2.
std::pair<std::size_t, std::size_t> distinct_pair(std::size_t n, Rng& rng) {
    const auto a = uniform_index(rng, n);
    auto b = uniform_index(rng, n - 1);
    if (b >= a) ++b;
    return {a, b};
}

}  // namespace

TransitionMatrix mutate_matrix(const TransitionMatrix& m, MatrixMutation op, Rng& rng) {
    require(m.is_valid(), "cannot mutate an invalid transition matrix");
    const std::size_t n = m.size();
    TransitionMatrix out = m;
    switch (op) {
    case MatrixMutation::swap_rows: {
        if (n < 2) return out;
        const auto [a, b] = distinct_pair(n, rng);
        auto ra = out.row(a);
        auto rb = out.row(b);
        std::swap_ranges(ra.begin(), ra.end(), rb.begin());
        return out;
    }
    case MatrixMutation::shuffle_row: {
        const auto r = uniform_index(rng, n);
        const auto swaps = uniform_index(rng, n + 1);
        auto row = out.row(r);
        for (std::uint64_t s = 0; s < swaps; ++s) {
            const auto a = uniform_index(rng, n);
            const auto b = uniform_index(rng, n);
            std::swap(row[a], row[b]);
        }
        return out;
    }
    case MatrixMutation::minimum_change: {
        if (n < 2) return out;
        const auto r = uniform_index(rng, n);
        const auto [give, take] = distinct_pair(n, rng);
        minimum_change(out, r, give, take);
        return out;
    }
    case MatrixMutation::ruin_and_recreate:
        return random_deterministic_matrix(n, rng);
    case MatrixMutation::void_op:
        return out;
    }
    throw ContractViolation("unknown matrix mutation");
}

CmcsConfig mutate_configuration(const CmcsConfig& parent, Rng& rng, ConfigurationMutation* drawn) {
    const auto succ_op = kMatrixMutations[uniform_index(rng, kMatrixMutations.size())];
    const auto fail_op = kMatrixMutations[uniform_index(rng, kMatrixMutations.size())];
    if (drawn != nullptr) *drawn = {succ_op, fail_op};
    CmcsConfig child;
    child.components = parent.components;
    child.m_succ = mutate_matrix(parent.m_succ, succ_op, rng);
    child.m_fail = mutate_matrix(parent.m_fail, fail_op, rng);
    return child;
}

}  // namespace cmcs
