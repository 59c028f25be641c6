#pragma once

// Conditional Markov Chain Search execution. The engine is a set of function
// templates over a Domain (see component.hpp); it never inspects solutions
// beyond the domain's objective and feasibility predicate.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "cmcs/budget.hpp"
#include "cmcs/component.hpp"
#include "cmcs/config.hpp"
#include "cmcs/errors.hpp"
#include "cmcs/rng.hpp"
#include "cmcs/run_result.hpp"
#include "cmcs/transition_matrix.hpp"

namespace cmcs {

struct RunOptions {
    // Called after every chain step with the 0-based index of the applied
    // component and whether it improved on the previous objective.
    std::function<void(std::size_t component, bool improved)> observer;
    // Check the feasibility predicate after every component application and
    // throw ContractViolation on failure. Slow; meant for tests.
    bool check_feasibility = false;
};

namespace detail {

template <Domain D>
using Components = std::vector<const Component<D>*>;

template <Domain D>
void check_start(const typename D::Instance& inst, const typename D::Solution& s0) {
    require(D::is_feasible(inst, s0), "initial solution is infeasible");
}

template <Domain D>
Components<D> resolve_config(const ComponentPool<D>& pool, const CmcsConfig& cfg) {
    validate(cfg);
    return pool.resolve(cfg.components);
}

template <class Solution>
RunResult<Solution> start_result(const Solution& s0, Objective f0, BudgetMode unit) {
    RunResult<Solution> r;
    r.best_solution = s0;
    r.best_objective = f0;
    r.trace.push_back({0, f0});
    r.stamp_unit = unit;
    return r;
}

template <Domain D>
void apply_component(const Component<D>& c, const typename D::Instance& inst,
                     typename D::Solution& s, Rng& rng, const RunOptions& opts) {
    c.apply(inst, s, rng);
    if (opts.check_feasibility && !D::is_feasible(inst, s))
        throw ContractViolation("component '" + c.name + "' produced an infeasible solution");
}

// One CMCS chain (the Strategy A loop) starting from `start` with h = 0.
// Updates `result` in place whenever the chain beats result.best_objective.
// `after_step` runs after the transition step of every iteration and may
// consume budget (Strategy B hooks VND in there).
template <Domain D, class AfterStep>
void run_chain(const Components<D>& components, const CmcsConfig& cfg,
               const typename D::Instance& inst, typename D::Solution start, BudgetClock& clock,
               Rng& rng, RunResult<typename D::Solution>& result, TransitionCounts& counts,
               const RunOptions& opts, AfterStep&& after_step) {
    auto& current = start;
    Objective f_prev = D::objective(inst, current);
    std::size_t h = 0;
    while (!clock.expired()) {
        apply_component<D>(*components[h], inst, current, rng, opts);
        clock.tick();
        const Objective f_cur = D::objective(inst, current);
        const bool improved = f_cur < f_prev;
        const TransitionMatrix& m = improved ? cfg.m_succ : cfg.m_fail;
        const std::size_t next = roulette_wheel(m.row(h), rng);
        counts.add(h, next, improved);
        if (opts.observer) opts.observer(h, improved);
        bool new_best = false;
        if (improved && f_cur < result.best_objective) {
            result.best_solution = current;
            result.best_objective = f_cur;
            result.trace.push_back({clock.stamp(), f_cur});
            new_best = true;
        }
        h = next;
        after_step(new_best);
        f_prev = f_cur;
    }
    result.iterations_executed = clock.applications();
}

template <Domain D>
RunResult<typename D::Solution> strategy_a(const ComponentPool<D>& pool, const CmcsConfig& cfg,
                                           const typename D::Instance& inst,
                                           const typename D::Solution& s0, BudgetClock& clock,
                                           Rng& rng, const RunOptions& opts) {
    const auto components = resolve_config(pool, cfg);
    check_start<D>(inst, s0);
    auto result = start_result(s0, D::objective(inst, s0), clock.budget().mode);
    TransitionCounts counts(cfg.size());
    run_chain<D>(components, cfg, inst, s0, clock, rng, result, counts, opts, [](bool) {});
    result.transitions.push_back(std::move(counts));
    return result;
}

}  // namespace detail

// Variable neighbourhood descent over an ordered list of hill climbers,
// charged against `clock`. Each probe consumes one application.
template <Domain D>
typename D::Solution run_vnd(const std::vector<const Component<D>*>& hill_climbers,
                             typename D::Solution s, const typename D::Instance& inst,
                             BudgetClock& clock, Rng& rng, const RunOptions& opts = {}) {
    require(!hill_climbers.empty(), "VND needs at least one hill climber");
    for (const auto* hc : hill_climbers)
        require(hc->kind == ComponentKind::hill_climber,
                "VND component '" + hc->name + "' is not a hill climber");
    Objective f_best = D::objective(inst, s);
    std::size_t i = 0;
    while (!clock.expired()) {
        auto candidate = s;
        detail::apply_component<D>(*hill_climbers[i], inst, candidate, rng, opts);
        clock.tick();
        const Objective f_new = D::objective(inst, candidate);
        if (f_new < f_best) {
            s = std::move(candidate);
            f_best = f_new;
            i = 0;
        } else {
            if (i + 1 == hill_climbers.size()) return s;
            ++i;
        }
    }
    return s;
}

template <Domain D>
RunResult<typename D::Solution> run_strategy_a(const ComponentPool<D>& pool, const CmcsConfig& cfg,
                                               const typename D::Instance& inst,
                                               const typename D::Solution& s0, Budget budget,
                                               Rng& rng, const RunOptions& opts = {}) {
    BudgetClock clock(budget);
    return detail::strategy_a<D>(pool, cfg, inst, s0, clock, rng, opts);
}

struct StrategyBOptions {
    double vnd_threshold = 0.5;
    // Return S*_best as written (falls back to S* if VND never ran) instead
    // of the better of S* and S*_best.
    bool faithful = false;
};

template <Domain D>
RunResult<typename D::Solution> run_strategy_b(const ComponentPool<D>& pool, const CmcsConfig& cfg,
                                               const std::vector<std::string>& vnd_names,
                                               const typename D::Instance& inst,
                                               const typename D::Solution& s0, Budget budget,
                                               Rng& rng, StrategyBOptions b_opts = {},
                                               const RunOptions& opts = {}) {
    using Solution = typename D::Solution;
    const auto components = detail::resolve_config(pool, cfg);
    require(!vnd_names.empty(), "strategy B needs a non-empty VND list");
    const auto vnd = pool.resolve(vnd_names);
    detail::check_start<D>(inst, s0);

    BudgetClock clock(budget);
    // `chain` tracks S*, f* exactly as the plain chain does.
    auto chain = detail::start_result(s0, D::objective(inst, s0), budget.mode);
    auto reported = chain;  // the solution this run would return right now
    TransitionCounts counts(cfg.size());

    bool vnd_applied = false;
    bool vnd_ever = false;
    Solution polished_best{};
    Objective f_polished_best = 0;

    auto refresh_reported = [&] {
        const Solution* candidate = &chain.best_solution;
        Objective f = chain.best_objective;
        if (vnd_ever && (b_opts.faithful || f_polished_best < f)) {
            candidate = &polished_best;
            f = f_polished_best;
        }
        if (f < reported.best_objective) {
            reported.best_solution = *candidate;
            reported.best_objective = f;
            reported.trace.push_back({clock.stamp(), f});
        }
    };

    detail::run_chain<D>(components, cfg, inst, s0, clock, rng, chain, counts, opts,
                         [&](bool new_best) {
                             if (new_best) vnd_applied = false;
                             if (!vnd_applied && clock.reached(b_opts.vnd_threshold) &&
                                 !clock.expired()) {
                                 auto polished = run_vnd<D>(vnd, chain.best_solution, inst, clock,
                                                            rng, opts);
                                 const Objective f = D::objective(inst, polished);
                                 if (!vnd_ever || f < f_polished_best) {
                                     polished_best = std::move(polished);
                                     f_polished_best = f;
                                 }
                                 vnd_ever = true;
                                 vnd_applied = true;
                             }
                             refresh_reported();
                         });

    reported.iterations_executed = clock.applications();
    reported.transitions.push_back(std::move(counts));
    return reported;
}

template <Domain D>
RunResult<typename D::Solution> run_strategy_c(const ComponentPool<D>& pool,
                                               const TwoStageConfig& cfg,
                                               const typename D::Instance& inst,
                                               const typename D::Solution& s0, Budget budget,
                                               Rng& rng, const RunOptions& opts = {}) {
    validate(cfg);
    const auto first = detail::resolve_config(pool, cfg.sub1);
    const auto second = detail::resolve_config(pool, cfg.sub2);
    detail::check_start<D>(inst, s0);

    BudgetClock clock(budget);
    auto result = detail::start_result(s0, D::objective(inst, s0), budget.mode);

    clock.limit_to(cfg.split);
    TransitionCounts first_counts(cfg.sub1.size());
    detail::run_chain<D>(first, cfg.sub1, inst, s0, clock, rng, result, first_counts, opts,
                         [](bool) {});
    result.transitions.push_back(std::move(first_counts));

    clock.limit_to(1.0);
    if (!clock.expired()) {
        TransitionCounts second_counts(cfg.sub2.size());
        const auto phase_one_best = result.best_solution;
        detail::run_chain<D>(second, cfg.sub2, inst, phase_one_best, clock, rng, result,
                             second_counts, opts, [](bool) {});
        result.transitions.push_back(std::move(second_counts));
    }
    result.iterations_executed = clock.applications();
    return result;
}

// Dispatches on spec.strategy.
template <Domain D>
RunResult<typename D::Solution> run(const ComponentPool<D>& pool, const SolverSpec& spec,
                                    const typename D::Instance& inst,
                                    const typename D::Solution& s0, Budget budget, Rng& rng,
                                    const RunOptions& opts = {}) {
    validate(spec);
    switch (spec.strategy) {
    case Strategy::A:
        return run_strategy_a<D>(pool, spec.single(), inst, s0, budget, rng, opts);
    case Strategy::B:
        return run_strategy_b<D>(pool, spec.single(), spec.vnd, inst, s0, budget, rng,
                                 {spec.vnd_threshold, spec.faithful_b}, opts);
    case Strategy::C:
        return run_strategy_c<D>(pool, spec.two_stage(), inst, s0, budget, rng, opts);
    }
    throw ContractViolation("unknown strategy");
}

}  // namespace cmcs
