#include "ap3/components.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ap3/lap.hpp"
#include "cmcs/errors.hpp"

namespace ap3 {

using cmcs::require;
using cmcs::uniform_index;

Dimension to_dimension(int d) {
    require(d >= 1 && d <= 3, "dimension must be 1, 2 or 3");
    return static_cast<Dimension>(d);
}

void random_swap(Solution& s, cmcs::Rng& rng) {
    const int n = s.size();
    require(n >= 2, "random swap needs n >= 2");
    const auto d = kDimensions[uniform_index(rng, 3)];
    const auto a = static_cast<int>(uniform_index(rng, n));
    auto b = static_cast<int>(uniform_index(rng, n - 1));
    if (b >= a) ++b;
    apply_swap(s, {d, std::min(a, b), std::max(a, b)});
}

namespace {

// The five non-identity permutations of three slots.
constexpr std::array<std::array<int, 3>, 5> kShuffles = {{
    {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

void shuffle_three(Solution& s, cmcs::Rng& rng) {
    const int n = s.size();
    require(n >= 3, "shuffle three needs n >= 3");
    const auto d = kDimensions[uniform_index(rng, 3)];
    std::array<int, 3> pos{};
    pos[0] = static_cast<int>(uniform_index(rng, n));
    do pos[1] = static_cast<int>(uniform_index(rng, n));
    while (pos[1] == pos[0]);
    do pos[2] = static_cast<int>(uniform_index(rng, n));
    while (pos[2] == pos[0] || pos[2] == pos[1]);
    std::sort(pos.begin(), pos.end());
    const auto& perm = kShuffles[uniform_index(rng, kShuffles.size())];

    const std::array<Pair, 3> old = {s[pos[0]], s[pos[1]], s[pos[2]]};
    for (int t = 0; t < 3; ++t) {
        const Pair& from = old[perm[t]];
        Pair& to = s[pos[t]];
        switch (d) {
        case Dimension::i:
            to = from;
            break;
        case Dimension::j:
            to.j = from.j;
            break;
        case Dimension::k:
            to.k = from.k;
            break;
        }
    }
}

void worst_swap(const Instance& inst, Solution& s) {
    Cost best_delta = 0;
    SwapMove chosen{};
    bool found = false;
    for_each_swap_move(s.size(), [&](SwapMove m) {
        const Cost delta = swap_delta(inst, s, m);
        if (delta > best_delta) {
            best_delta = delta;
            chosen = m;
            found = true;
        }
        return true;
    });
    if (found) apply_swap(s, chosen);
}

void first_worsen(const Instance& inst, Solution& s) {
    for_each_swap_move(s.size(), [&](SwapMove m) {
        if (swap_delta(inst, s, m) > 0) {
            apply_swap(s, m);
            return false;
        }
        return true;
    });
}

void first_swap(const Instance& inst, Solution& s) {
    for_each_swap_move(s.size(), [&](SwapMove m) {
        if (swap_delta(inst, s, m) < 0) {
            apply_swap(s, m);
            return false;
        }
        return true;
    });
}

void best_swap(const Instance& inst, Solution& s) {
    Cost best_delta = 0;
    SwapMove chosen{};
    bool found = false;
    for_each_swap_move(s.size(), [&](SwapMove m) {
        const Cost delta = swap_delta(inst, s, m);
        if (delta < best_delta) {
            best_delta = delta;
            chosen = m;
            found = true;
        }
        return true;
    });
    if (found) apply_swap(s, chosen);
}

namespace {

// Best solution reachable by permuting the values of dimension d, with the
// other two coordinates of every position held fixed. Row a of the LAP
// matrix is the dimension-d value, column b the position whose residual
// pair receives it.
Cost hungarian_candidate(const Instance& inst, const Solution& s, Dimension d, Solution& out) {
    const int n = s.size();
    const auto un = static_cast<std::size_t>(n);
    std::vector<Cost> m(un * un);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Cost c = 0;
            switch (d) {
            case Dimension::i:
                c = inst.cost(a, s[b].j, s[b].k);
                break;
            case Dimension::j:
                c = inst.cost(b, a, s[b].k);
                break;
            case Dimension::k:
                c = inst.cost(b, s[b].j, a);
                break;
            }
            m[a * un + b] = c;
        }
    }
    const LapResult lap = solve_lap(m, un);
    out = s;
    for (int a = 0; a < n; ++a) {
        const int b = lap.row_to_col[a];
        switch (d) {
        case Dimension::i:
            out[a] = s[b];
            break;
        case Dimension::j:
            out[b].j = a;
            break;
        case Dimension::k:
            out[b].k = a;
            break;
        }
    }
    return lap.cost;
}

}  // namespace

void hungarian(const Instance& inst, Solution& s, Dimension d) {
    if (s.size() < 2) return;
    Solution candidate;
    const Cost f = hungarian_candidate(inst, s, d, candidate);
    if (f < objective_unchecked(inst, s)) s = std::move(candidate);
}

void min_dimension_hungarian(const Instance& inst, Solution& s) {
    if (s.size() < 2) return;
    Cost best = objective_unchecked(inst, s);
    Solution best_solution;
    bool found = false;
    Solution candidate;
    for (Dimension d : kDimensions) {
        const Cost f = hungarian_candidate(inst, s, d, candidate);
        if (f < best) {
            best = f;
            best_solution = candidate;
            found = true;
        }
    }
    if (found) s = std::move(best_solution);
}

void all_dimension_hungarian(const Instance& inst, Solution& s) {
    if (s.size() < 2) return;
    Cost f = objective_unchecked(inst, s);
    for (;;) {
        const Cost cycle_start = f;
        for (Dimension d : kDimensions) {
            hungarian(inst, s, d);
            f = objective_unchecked(inst, s);
        }
        if (f >= cycle_start) return;
    }
}

void random_dimension_hungarian(const Instance& inst, Solution& s, cmcs::Rng& rng) {
    hungarian(inst, s, kDimensions[uniform_index(rng, 3)]);
}

namespace {

using cmcs::ComponentKind;
using Component = cmcs::Component<Ap3Domain>;

Component hungarian_component(const char* name, Dimension d) {
    return {name, ComponentKind::hill_climber,
            [d](const Instance& inst, Solution& s, cmcs::Rng&) { hungarian(inst, s, d); }};
}

std::vector<Component> mutations() {
    return {
        {names::kRandomSwap, ComponentKind::mutation,
         [](const Instance&, Solution& s, cmcs::Rng& rng) { random_swap(s, rng); }},
        {names::kShuffleThree, ComponentKind::mutation,
         [](const Instance&, Solution& s, cmcs::Rng& rng) { shuffle_three(s, rng); }},
        {names::kWorstSwap, ComponentKind::mutation,
         [](const Instance& inst, Solution& s, cmcs::Rng&) { worst_swap(inst, s); }},
        {names::kFirstWorsen, ComponentKind::mutation,
         [](const Instance& inst, Solution& s, cmcs::Rng&) { first_worsen(inst, s); }},
    };
}

Component plain_climber(const char* name, void (*fn)(const Instance&, Solution&)) {
    return {name, ComponentKind::hill_climber,
            [fn](const Instance& inst, Solution& s, cmcs::Rng&) { fn(inst, s); }};
}

Component min_dimension() { return plain_climber(names::kMinDimension, min_dimension_hungarian); }
Component all_dimension() { return plain_climber(names::kAllDimension, all_dimension_hungarian); }
Component random_dimension() {
    return {names::kRandomDimension, ComponentKind::hill_climber,
            [](const Instance& inst, Solution& s, cmcs::Rng& rng) {
                random_dimension_hungarian(inst, s, rng);
            }};
}

}  // namespace

Pool full_catalog() {
    Pool pool(mutations());
    pool.add(plain_climber(names::kFirstSwap, first_swap));
    pool.add(plain_climber(names::kBestSwap, best_swap));
    pool.add(hungarian_component(names::kHungarian1, Dimension::i));
    pool.add(hungarian_component(names::kHungarian2, Dimension::j));
    pool.add(hungarian_component(names::kHungarian3, Dimension::k));
    pool.add(min_dimension());
    pool.add(all_dimension());
    pool.add(random_dimension());
    return pool;
}

Pool standard_pool() {
    return full_catalog().subset({names::kRandomSwap, names::kShuffleThree, names::kWorstSwap,
                                  names::kFirstWorsen, names::kFirstSwap, names::kBestSwap,
                                  names::kHungarian1, names::kMinDimension, names::kAllDimension,
                                  names::kRandomDimension});
}

Pool pool_from_spec(const std::string& spec) {
    if (spec == "standard") return standard_pool();
    if (spec == "all") return full_catalog();
    std::vector<std::string> list;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) list.push_back(item);
    require(!list.empty(), "component pool is empty");
    return full_catalog().subset(list);
}

}  // namespace ap3
