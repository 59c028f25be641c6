#include <gtest/gtest.h>

#include <map>

#include "ap3/solution.hpp"
#include "cmcs/errors.hpp"
#include "support/oracles.hpp"

using namespace ap3;

TEST(Objective, SingleTriple) {
    const Instance inst(1, {7});
    EXPECT_EQ(objective(inst, Solution::identity(1)), 7);
}

TEST(Objective, DirectSum) {
    std::vector<Cost> c(8, 100);
    c[0] = 3;  // c(1,1,1)
    c[7] = 4;  // c(2,2,2)
    const Instance inst(2, c);
    EXPECT_EQ(objective(inst, Solution::identity(2)), 7);
}

TEST(Objective, InfeasibleSolutionThrows) {
    const auto inst = oracle::random_instance(3, 1);
    Solution dup_j({{0, 0}, {0, 1}, {2, 2}});
    Solution dup_k({{0, 1}, {1, 1}, {2, 2}});
    Solution out_of_range({{0, 0}, {1, 1}, {3, 2}});
    Solution short_one({{0, 0}, {1, 1}});
    for (const auto& s : {dup_j, dup_k, out_of_range, short_one}) {
        EXPECT_FALSE(is_feasible(s, 3));
        EXPECT_THROW(objective(inst, s), cmcs::ContractViolation);
    }
}

TEST(Objective, MatchesTripleSumOnAllSolutions) {
    const auto inst = oracle::random_instance(3, 2);
    const auto all = oracle::all_solutions(3);
    ASSERT_EQ(all.size(), 36u);
    Cost best = std::numeric_limits<Cost>::max();
    for (const auto& s : all) {
        ASSERT_TRUE(is_feasible(s, 3));
        EXPECT_EQ(objective(inst, s), oracle::cost_of(inst, s));
        best = std::min(best, objective(inst, s));
    }
    EXPECT_EQ(best, oracle::exhaustive_optimum(inst));
}

TEST(RandomSolution, SizeOne) {
    cmcs::Rng rng(1);
    EXPECT_EQ(random_solution(1, rng), Solution::identity(1));
}

TEST(RandomSolution, AlwaysFeasible) {
    cmcs::Rng rng(2);
    for (int t = 0; t < 10000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 9);
        ASSERT_TRUE(is_feasible(random_solution(n, rng), n));
    }
}

TEST(RandomSolution, UniformOverThirtySixSolutions) {
    cmcs::Rng rng(3);
    std::map<std::vector<int>, int> seen;
    const int samples = 18000;
    for (int t = 0; t < samples; ++t) {
        const auto s = random_solution(3, rng);
        std::vector<int> key;
        for (const auto& p : s.pairs) {
            key.push_back(p.j);
            key.push_back(p.k);
        }
        ++seen[key];
    }
    ASSERT_EQ(seen.size(), 36u);
    for (const auto& [key, count] : seen) EXPECT_NEAR(count / double(samples), 1.0 / 36, 0.01);
}
