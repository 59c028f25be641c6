#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cmcs/component.hpp"

namespace cmcs {

using Subset = std::vector<std::size_t>;  // ascending pool indices

// All `size`-element subsets of the pool that contain at least one mutation
// and at least one hill climber, in lexicographic order of pool indices.
std::vector<Subset> enumerate_meaningful_subsets(std::span<const ComponentKind> pool_kinds,
                                                 std::size_t size);

bool is_meaningful(std::span<const ComponentKind> kinds);

// Ordered (sub1, sub2) index pairs over `count` subsets, optionally
// excluding pairs whose members coincide.
std::vector<std::pair<std::size_t, std::size_t>> subset_pairs(std::size_t count, bool distinct);

}  // namespace cmcs
