#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "cmcs/config.hpp"
#include "cmcs/rng.hpp"
#include "cmcs/transition_matrix.hpp"

namespace cmcs {

enum class MatrixMutation { swap_rows, shuffle_row, minimum_change, ruin_and_recreate, void_op };

inline constexpr std::array<MatrixMutation, 5> kMatrixMutations = {
    MatrixMutation::swap_rows, MatrixMutation::shuffle_row, MatrixMutation::minimum_change,
    MatrixMutation::ruin_and_recreate, MatrixMutation::void_op};

std::string_view to_string(MatrixMutation op);

// Every row gets a single entry of weight 1 in a uniformly chosen column.
TransitionMatrix random_deterministic_matrix(std::size_t size, Rng& rng);

TransitionMatrix mutate_matrix(const TransitionMatrix& m, MatrixMutation op, Rng& rng);

// Moves one discretization step (1/|H|) of probability from column `take`
// to column `give` in `row`. No-op if either side is already at its bound,
// or if the two positions coincide.
void minimum_change(TransitionMatrix& m, std::size_t row, std::size_t give, std::size_t take);

struct ConfigurationMutation {
    MatrixMutation succ;
    MatrixMutation fail;
};

// Draws two operators independently and uniformly, applies the first to
// M_succ and the second to M_fail. The component subset is inherited.
CmcsConfig mutate_configuration(const CmcsConfig& parent, Rng& rng,
                                ConfigurationMutation* drawn = nullptr);

}  // namespace cmcs
