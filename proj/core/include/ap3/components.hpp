#pragma once

#include <string>
#include <vector>

#include "ap3/instance.hpp"
#include "ap3/neighborhood.hpp"
#include "ap3/solution.hpp"
#include "cmcs/component.hpp"
#include "cmcs/rng.hpp"

namespace ap3 {

// Engine plug-in for the three-index assignment problem.
struct Ap3Domain {
    using Instance = ap3::Instance;
    using Solution = ap3::Solution;

    static cmcs::Objective objective(const Instance& inst, const Solution& s) {
        return objective_unchecked(inst, s);
    }
    static bool is_feasible(const Instance& inst, const Solution& s) {
        return ap3::is_feasible(s, inst.size());
    }
    static Solution initial_solution(const Instance& inst, cmcs::Rng& rng) {
        return random_solution(inst.size(), rng);
    }
};

using Pool = cmcs::ComponentPool<Ap3Domain>;

// Throws ContractViolation unless d is 1, 2 or 3.
Dimension to_dimension(int d);

// All components modify the solution in place and keep it feasible.

// Mutations.
void random_swap(Solution& s, cmcs::Rng& rng);
void shuffle_three(Solution& s, cmcs::Rng& rng);
void worst_swap(const Instance& inst, Solution& s);
void first_worsen(const Instance& inst, Solution& s);

// Hill climbers.
void first_swap(const Instance& inst, Solution& s);
void best_swap(const Instance& inst, Solution& s);
// Hungarian(d): optimal permutation of dimension d's values; keeps s unless
// strictly better.
void hungarian(const Instance& inst, Solution& s, Dimension d);
void min_dimension_hungarian(const Instance& inst, Solution& s);
void all_dimension_hungarian(const Instance& inst, Solution& s);
void random_dimension_hungarian(const Instance& inst, Solution& s, cmcs::Rng& rng);

// Component names as used in configuration files.
namespace names {
inline constexpr const char* kRandomSwap = "random-swap";
inline constexpr const char* kShuffleThree = "shuffle-three";
inline constexpr const char* kWorstSwap = "worst-swap";
inline constexpr const char* kFirstWorsen = "first-worsen";
inline constexpr const char* kFirstSwap = "first-swap";
inline constexpr const char* kBestSwap = "best-swap";
inline constexpr const char* kHungarian1 = "hungarian-1";
inline constexpr const char* kHungarian2 = "hungarian-2";
inline constexpr const char* kHungarian3 = "hungarian-3";
inline constexpr const char* kMinDimension = "min-dimension-hungarian";
inline constexpr const char* kAllDimension = "all-dimension-hungarian";
inline constexpr const char* kRandomDimension = "random-dimension-hungarian";
}  // namespace names

// Every AP3 component, including Hungarian(d) for each d.
Pool full_catalog();

// The ten-component pool: four mutations, then six hill climbers with
// Hungarian(d) represented by d = 1.
Pool standard_pool();

// Pool built from a comma-separated name list, or "standard" / "all".
Pool pool_from_spec(const std::string& spec);

}  // namespace ap3
