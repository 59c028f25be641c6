#include "ap3/solution.hpp"

#include <utility>

#include "cmcs/errors.hpp"

namespace ap3 {

Solution Solution::identity(int n) {
    std::vector<Pair> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = {i, i};
    return Solution(std::move(p));
}

bool is_feasible(const Solution& s, int n) {
    if (s.size() != n) return false;
    std::vector<char> seen_j(static_cast<std::size_t>(n), 0);
    std::vector<char> seen_k(static_cast<std::size_t>(n), 0);
    for (const auto& [j, k] : s.pairs) {
        if (j < 0 || j >= n || k < 0 || k >= n) return false;
        if (seen_j[j] || seen_k[k]) return false;
        seen_j[j] = seen_k[k] = 1;
    }
    return true;
}

Cost objective_unchecked(const Instance& inst, const Solution& s) {
    Cost total = 0;
    for (int i = 0; i < s.size(); ++i) total += inst.cost(i, s[i].j, s[i].k);
    return total;
}

Cost objective(const Instance& inst, const Solution& s) {
    cmcs::require(is_feasible(s, inst.size()), "solution is infeasible for this instance");
    return objective_unchecked(inst, s);
}

namespace {

void shuffle_column(std::vector<int>& v, cmcs::Rng& rng) {
    // Fisher-Yates with the portable index sampler.
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[cmcs::uniform_index(rng, i)]);
}

}  // namespace

Solution random_solution(int n, cmcs::Rng& rng) {
    cmcs::require(n >= 1, "solution size must be at least 1");
    std::vector<int> js(static_cast<std::size_t>(n));
    std::vector<int> ks(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) js[i] = ks[i] = i;
    shuffle_column(js, rng);
    shuffle_column(ks, rng);
    std::vector<Pair> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = {js[i], ks[i]};
    return Solution(std::move(p));
}

}  // namespace ap3
