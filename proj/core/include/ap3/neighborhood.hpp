#pragma once

#include <cstdint>
#include <utility>

#include "ap3/instance.hpp"
#include "ap3/solution.hpp"

namespace ap3 {

// The three index dimensions of a triple (i, j, k).
enum class Dimension { i = 1, j = 2, k = 3 };

inline constexpr Dimension kDimensions[] = {Dimension::i, Dimension::j, Dimension::k};

// Exchange of one coordinate between the triples at positions p < q.
// A Dimension::i swap exchanges the i labels, which in the i-indexed array
// means exchanging the whole (j, k) pairs of positions p and q.
struct SwapMove {
    Dimension dim = Dimension::i;
    int p = 0;
    int q = 0;

    friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

inline std::int64_t swap_neighborhood_size(int n) {
    return n < 2 ? 0 : 3 * static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Objective change caused by `m`. O(1).
inline Cost swap_delta(const Instance& inst, const Solution& s, SwapMove m) {
    const Pair a = s[m.p];
    const Pair b = s[m.q];
    const Cost before = inst.cost(m.p, a.j, a.k) + inst.cost(m.q, b.j, b.k);
    switch (m.dim) {
    case Dimension::i:
        return inst.cost(m.p, b.j, b.k) + inst.cost(m.q, a.j, a.k) - before;
    case Dimension::j:
        return inst.cost(m.p, b.j, a.k) + inst.cost(m.q, a.j, b.k) - before;
    case Dimension::k:
        return inst.cost(m.p, a.j, b.k) + inst.cost(m.q, b.j, a.k) - before;
    }
    return 0;
}

inline void apply_swap(Solution& s, SwapMove m) {
    switch (m.dim) {
    case Dimension::i:
        std::swap(s[m.p], s[m.q]);
        break;
    case Dimension::j:
        std::swap(s[m.p].j, s[m.q].j);
        break;
    case Dimension::k:
        std::swap(s[m.p].k, s[m.q].k);
        break;
    }
}

// Visits the Swap neighbourhood in scan order: dimension ascending, then
// (p, q) lexicographic with p < q. `visit` returns false to stop early.
template <class Visit>
void for_each_swap_move(int n, Visit&& visit) {
    for (Dimension d : kDimensions)
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (!visit(SwapMove{d, p, q})) return;
}

}  // namespace ap3
