#include <gtest/gtest.h>

#include <map>

#include "ap3/components.hpp"
#include "ap3/neighborhood.hpp"
#include "support/oracles.hpp"

using namespace ap3;

namespace {

Solution random_start(int n, cmcs::Rng& rng) { return random_solution(n, rng); }

}  // namespace

TEST(SwapNeighborhood, Sizes) {
    EXPECT_EQ(swap_neighborhood_size(1), 0);
    EXPECT_EQ(swap_neighborhood_size(2), 3);
    EXPECT_EQ(swap_neighborhood_size(3), 9);
    for (int n = 1; n <= 7; ++n) {
        std::int64_t count = 0;
        for_each_swap_move(n, [&](SwapMove) { return ++count, true; });
        EXPECT_EQ(count, swap_neighborhood_size(n));
    }
}

TEST(SwapNeighborhood, MovesMatchTripleConstruction) {
    cmcs::Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 6;
        const auto inst = oracle::random_instance(n, 100 + trial);
        const auto s = random_start(n, rng);
        const auto expected = oracle::swap_neighbors(inst, s);
        std::size_t idx = 0;
        for_each_swap_move(n, [&](SwapMove m) {
            const auto& want = expected.at(idx++);
            EXPECT_EQ(static_cast<int>(m.dim) - 1, want.dim);
            EXPECT_EQ(m.p, want.p);
            EXPECT_EQ(m.q, want.q);
            auto t = s;
            apply_swap(t, m);
            EXPECT_TRUE(is_feasible(t, n));
            EXPECT_EQ(t, want.solution);
            EXPECT_EQ(objective(inst, s) + swap_delta(inst, s, m), want.cost);
            return true;
        });
        EXPECT_EQ(idx, expected.size());
    }
}

TEST(SwapNeighborhood, DimensionSwapTouchesOnlyThatCoordinate) {
    cmcs::Rng rng(2);
    const auto s = random_start(6, rng);
    for_each_swap_move(6, [&](SwapMove m) {
        auto t = s;
        apply_swap(t, m);
        for (int pos = 0; pos < 6; ++pos) {
            if (pos == m.p || pos == m.q) continue;
            EXPECT_EQ(t[pos], s[pos]);
        }
        if (m.dim == Dimension::j) {
            EXPECT_EQ(t[m.p].k, s[m.p].k);
            EXPECT_EQ(t[m.p].j, s[m.q].j);
        }
        if (m.dim == Dimension::k) {
            EXPECT_EQ(t[m.p].j, s[m.p].j);
            EXPECT_EQ(t[m.p].k, s[m.q].k);
        }
        if (m.dim == Dimension::i) EXPECT_EQ(t[m.p], s[m.q]);
        return true;
    });
}

TEST(SwapClimbers, MatchExplicitEnumeration) {
    cmcs::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 4;
        const auto inst = oracle::random_instance(n, 500 + trial, trial % 2 ? 100 : 5);
        const auto s = random_start(n, rng);
        const Cost f = oracle::cost_of(inst, s);
        const auto nbrs = oracle::swap_neighbors(inst, s);

        const oracle::Neighbor* argmin = nullptr;
        const oracle::Neighbor* argmax = nullptr;
        const oracle::Neighbor* first_better = nullptr;
        const oracle::Neighbor* first_worse = nullptr;
        for (const auto& nb : nbrs) {
            if (!argmin || nb.cost < argmin->cost) argmin = &nb;
            if (!argmax || nb.cost > argmax->cost) argmax = &nb;
            if (!first_better && nb.cost < f) first_better = &nb;
            if (!first_worse && nb.cost > f) first_worse = &nb;
        }

        auto t = s;
        best_swap(inst, t);
        EXPECT_EQ(t, argmin->cost < f ? argmin->solution : s);
        t = s;
        worst_swap(inst, t);
        EXPECT_EQ(t, argmax->cost > f ? argmax->solution : s);
        t = s;
        first_swap(inst, t);
        EXPECT_EQ(t, first_better ? first_better->solution : s);
        t = s;
        first_worsen(inst, t);
        EXPECT_EQ(t, first_worse ? first_worse->solution : s);
    }
}

TEST(SwapClimbers, FlatCostsLeaveSolutionUnchanged) {
    const Instance inst(4, std::vector<Cost>(64, 9));
    cmcs::Rng rng(4);
    const auto s = random_start(4, rng);
    for (auto fn : {worst_swap, first_worsen, best_swap, first_swap}) {
        auto t = s;
        fn(inst, t);
        EXPECT_EQ(t, s);
    }
}

TEST(SwapClimbers, GlobalOptimumIsFixed) {
    const auto inst = oracle::random_instance(3, 42);
    const Cost opt = oracle::exhaustive_optimum(inst);
    for (const auto& s : oracle::all_solutions(3)) {
        if (oracle::cost_of(inst, s) != opt) continue;
        auto a = s, b = s;
        best_swap(inst, a);
        first_swap(inst, b);
        EXPECT_EQ(a, s);
        EXPECT_EQ(b, s);
    }
}

TEST(RandomSwap, UniformOverNeighbors) {
    const auto inst = oracle::random_instance(3, 5);
    const auto s = Solution::identity(3);
    std::map<std::vector<int>, int> expected;
    for (const auto& nb : oracle::swap_neighbors(inst, s)) {
        std::vector<int> key;
        for (const auto& p : nb.solution.pairs) key.insert(key.end(), {p.j, p.k});
        expected[key] = 0;
    }
    ASSERT_EQ(expected.size(), 9u);
    cmcs::Rng rng(6);
    const int draws = 27000;
    for (int t = 0; t < draws; ++t) {
        auto x = s;
        random_swap(x, rng);
        std::vector<int> key;
        for (const auto& p : x.pairs) key.insert(key.end(), {p.j, p.k});
        ASSERT_TRUE(expected.count(key));
        ++expected[key];
    }
    for (const auto& [key, count] : expected) EXPECT_NEAR(count / double(draws), 1.0 / 9, 0.01);
}

TEST(ShuffleThree, ChangesTwoOrThreePositions) {
    cmcs::Rng rng(7);
    for (int t = 0; t < 2000; ++t) {
        const int n = 3 + t % 5;
        const auto s = random_start(n, rng);
        auto x = s;
        shuffle_three(x, rng);
        ASSERT_TRUE(is_feasible(x, n));
        int changed_pos = 0;
        for (int p = 0; p < n; ++p) changed_pos += x[p] != s[p];
        EXPECT_GE(changed_pos, 2);
        EXPECT_LE(changed_pos, 3);
    }
}

TEST(ShuffleThree, UniformOverShuffleNeighborhoodAtNThree) {
    // At n = 3 the shuffle neighbourhood is 3 dimensions x 5 permutations
    // (some coincide as solutions). Count the outcomes by triple-level
    // construction and compare frequencies.
    const auto s = Solution::identity(3);
    std::map<std::vector<int>, double> expected;
    const int perms[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& perm : perms) {
            auto t = oracle::to_triples(s);
            const auto base = t;
            for (int b = 0; b < 3; ++b) t[b][dim] = base[perm[b]][dim];
            const auto sol = oracle::from_triples(t);
            std::vector<int> key;
            for (const auto& p : sol.pairs) key.insert(key.end(), {p.j, p.k});
            expected[key] += 1.0 / 15;
        }
    }
    cmcs::Rng rng(8);
    std::map<std::vector<int>, int> seen;
    const int draws = 30000;
    for (int t = 0; t < draws; ++t) {
        auto x = s;
        shuffle_three(x, rng);
        std::vector<int> key;
        for (const auto& p : x.pairs) key.insert(key.end(), {p.j, p.k});
        ++seen[key];
    }
    ASSERT_EQ(seen.size(), expected.size());
    for (const auto& [key, p] : expected) EXPECT_NEAR(seen[key] / double(draws), p, 0.01);
}
