#pragma once

#include <cstddef>
#include <vector>

#include "ap3/instance.hpp"
#include "cmcs/rng.hpp"

namespace ap3 {

// The (j, k) values of the triple whose first index is the array position.
struct Pair {
    int j = 0;
    int k = 0;

    friend bool operator==(const Pair&, const Pair&) = default;
};

// Feasible AP3 solution: triples (i, pairs[i].j, pairs[i].k), where both the
// j column and the k column are permutations of 0..n-1.
struct Solution {
    std::vector<Pair> pairs;

    Solution() = default;
    explicit Solution(std::vector<Pair> p) : pairs(std::move(p)) {}

    int size() const { return static_cast<int>(pairs.size()); }
    Pair& operator[](std::size_t i) { return pairs[i]; }
    const Pair& operator[](std::size_t i) const { return pairs[i]; }

    static Solution identity(int n);

    friend bool operator==(const Solution&, const Solution&) = default;
};

bool is_feasible(const Solution& s, int n);

// Sum of c(i, j_i, k_i). Throws ContractViolation if s is infeasible for inst.
Cost objective(const Instance& inst, const Solution& s);
Cost objective_unchecked(const Instance& inst, const Solution& s);

// Two independent uniform permutations for the j and k columns.
Solution random_solution(int n, cmcs::Rng& rng);

}  // namespace ap3
