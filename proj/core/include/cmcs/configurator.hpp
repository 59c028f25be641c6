#pragma once

// Offline configuration of CMCS: for every meaningful component subset, a
// population-based search over discretized transition matrices, followed by
// selection of the best subset on a validation set.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cmcs/budget.hpp"
#include "cmcs/component.hpp"
#include "cmcs/config.hpp"
#include "cmcs/engine.hpp"
#include "cmcs/errors.hpp"
#include "cmcs/matrix_mutation.hpp"
#include "cmcs/parallel.hpp"
#include "cmcs/rng.hpp"
#include "cmcs/subsets.hpp"

namespace cmcs {

// Domains used for training must also build starting solutions.
template <class D>
concept TrainableDomain = Domain<D> && requires(const typename D::Instance& inst, Rng& rng) {
    { D::initial_solution(inst, rng) } -> std::convertible_to<typename D::Solution>;
};

enum class Scoring { mean_objective, mean_relative_error };

std::string_view to_string(Scoring s);
Scoring parse_scoring(std::string_view text);

// Stopping rule of one matrix search: wall-clock milliseconds, or a number
// of generations (the initial population counts as the first).
struct SearchBudget {
    enum class Mode { wall_clock, generations };
    Mode mode = Mode::wall_clock;
    std::int64_t limit = 4 * 60 * 1000;

    static SearchBudget millis(std::int64_t ms) { return {Mode::wall_clock, ms}; }
    static SearchBudget generations(std::int64_t g) { return {Mode::generations, g}; }
};

// How stage 1 of the Strategy C search scores sub-configuration 1 alone.
enum class StageOneMode {
    full_budget,  // Strategy A over the whole per-run budget
    split_budget  // Strategy A over split * budget only
};

struct TrainingProtocol {
    Budget per_run_budget = Budget::millis(1000);
    SearchBudget matrix_search = SearchBudget::millis(4 * 60 * 1000);
    std::size_t children_of_generation_best = 25;
    std::size_t children_of_global_best = 25;
    Scoring scoring = Scoring::mean_objective;
    std::size_t workers = 1;
    std::uint64_t seed = 0;

    // Strategy B / C parameters; not searched.
    std::vector<std::string> vnd;
    double vnd_threshold = 0.5;
    double split = 0.8;
    bool distinct_pairs = false;
    StageOneMode stage_one = StageOneMode::full_budget;

    std::size_t population_size() const {
        return children_of_generation_best + children_of_global_best;
    }
};

template <Domain D>
struct EvaluationSet {
    std::vector<const typename D::Instance*> instances;
    // Reference objectives, parallel to `instances`; required for
    // Scoring::mean_relative_error only.
    std::vector<Objective> baseline;
};

struct GenerationRecord {
    std::string search;  // e.g. "subset 3" or "pair 5 stage 2"
    std::size_t search_id = 0;
    std::size_t generation = 0;
    double generation_best = 0;
    double global_best = 0;
    std::size_t evaluations = 0;
};

struct EvaluationRecord {
    std::string search;
    std::size_t generation = 0;
    std::size_t member = 0;
    double score = 0;
};

struct TrainingLog {
    std::function<void(const GenerationRecord&)> on_generation;
    std::function<void(const EvaluationRecord&)> on_evaluation;
};

struct MatrixSearchResult {
    CmcsConfig best;
    double score = std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;
    std::size_t generations = 0;
};

struct LeaderboardEntry {
    std::vector<std::string> sub1;
    std::vector<std::string> sub2;  // Strategy C only
    double training_score = 0;
    double validation_score = 0;
    std::size_t evaluations = 0;

    std::string label() const;
};

struct ConfiguratorResult {
    SolverSpec winner;
    std::size_t winner_index = 0;
    std::vector<LeaderboardEntry> leaderboard;
    double wall_seconds = 0;
};

// Seed streams used by the configurator; kept distinct so that training,
// validation and matrix mutation never share random numbers.
namespace seed_tag {
inline constexpr std::uint64_t kTraining = 1;
inline constexpr std::uint64_t kValidation = 2;
inline constexpr std::uint64_t kMutation = 3;
}  // namespace seed_tag

// Scores a single run's best objective on instance `index` of `set`.
template <Domain D>
double run_score(const EvaluationSet<D>& set, std::size_t index, Objective best, Scoring scoring) {
    if (scoring == Scoring::mean_objective) return static_cast<double>(best);
    require(index < set.baseline.size(), "relative-error scoring needs a baseline for every instance");
    const auto ref = static_cast<double>(set.baseline[index]);
    require(ref > 0, "baseline objectives must be positive");
    return 100.0 * (static_cast<double>(best) - ref) / ref;
}

// Evaluates every spec on every instance (one run each) and returns the
// mean score per spec. seed_of(member, instance) gives the run seed.
template <TrainableDomain D>
std::vector<double> evaluate_population(
    const ComponentPool<D>& pool, const std::vector<SolverSpec>& specs,
    const EvaluationSet<D>& set, Budget per_run_budget, Scoring scoring, std::size_t workers,
    const std::function<std::uint64_t(std::size_t, std::size_t)>& seed_of) {
    require(!set.instances.empty(), "evaluation needs at least one instance");
    for (const auto& spec : specs) validate(spec);
    const std::size_t m = set.instances.size();
    std::vector<double> per_run(specs.size() * m, 0.0);
    parallel_for(per_run.size(), workers, [&](std::size_t task) {
        const std::size_t member = task / m;
        const std::size_t inst = task % m;
        Rng rng(seed_of(member, inst));
        const auto& instance = *set.instances[inst];
        const auto s0 = D::initial_solution(instance, rng);
        const auto result = run<D>(pool, specs[member], instance, s0, per_run_budget, rng);
        per_run[task] = run_score<D>(set, inst, result.best_objective, scoring);
    });
    std::vector<double> scores(specs.size(), 0.0);
    for (std::size_t member = 0; member < specs.size(); ++member) {
        double sum = 0;
        for (std::size_t inst = 0; inst < m; ++inst) sum += per_run[member * m + inst];
        scores[member] = sum / static_cast<double>(m);
    }
    return scores;
}

template <TrainableDomain D>
double evaluate_configuration(const ComponentPool<D>& pool, const SolverSpec& spec,
                              const EvaluationSet<D>& set, Budget per_run_budget, Scoring scoring,
                              std::uint64_t seed, std::size_t workers = 1) {
    return evaluate_population<D>(pool, {spec}, set, per_run_budget, scoring, workers,
                                  [seed](std::size_t, std::size_t inst) {
                                      return derive_seed(seed, {inst});
                                  })
        .front();
}

// Population search over the matrices of one component subset.
// `make_spec` wraps a candidate into the spec actually run (for Strategy C
// stages it embeds the frozen sub-configuration). `incumbents` seed the
// initial population ahead of the random deterministic members.
template <TrainableDomain D>
MatrixSearchResult optimize_matrices(const ComponentPool<D>& pool,
                                     const std::vector<std::string>& subset,
                                     const std::function<SolverSpec(const CmcsConfig&)>& make_spec,
                                     const EvaluationSet<D>& training,
                                     const TrainingProtocol& protocol, std::size_t search_id,
                                     const std::string& search_label = {},
                                     const std::vector<CmcsConfig>& incumbents = {},
                                     const TrainingLog* log = nullptr) {
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    const std::size_t population_size = protocol.population_size();
    require(population_size > 0, "population size must be positive");
    require(protocol.matrix_search.limit > 0, "matrix search budget must be positive");
    Rng rng(derive_seed(protocol.seed, {seed_tag::kMutation, search_id}));

    std::vector<CmcsConfig> population;
    for (const auto& c : incumbents)
        if (population.size() < population_size) population.push_back(c);
    while (population.size() < population_size) {
        CmcsConfig c;
        c.components = subset;
        c.m_succ = random_deterministic_matrix(subset.size(), rng);
        c.m_fail = random_deterministic_matrix(subset.size(), rng);
        population.push_back(std::move(c));
    }

    MatrixSearchResult out;
    for (std::size_t generation = 0;; ++generation) {
        std::vector<SolverSpec> specs;
        specs.reserve(population.size());
        for (const auto& c : population) specs.push_back(make_spec(c));
        const auto scores = evaluate_population<D>(
            pool, specs, training, protocol.per_run_budget, protocol.scoring, protocol.workers,
            [&](std::size_t member, std::size_t inst) {
                return derive_seed(protocol.seed,
                                   {seed_tag::kTraining, search_id, generation, member, inst});
            });
        out.evaluations += scores.size();
        out.generations = generation + 1;

        std::size_t gen_best = 0;
        for (std::size_t i = 1; i < scores.size(); ++i)
            if (scores[i] < scores[gen_best]) gen_best = i;
        if (scores[gen_best] < out.score) {
            out.score = scores[gen_best];
            out.best = population[gen_best];
        }
        if (log != nullptr) {
            if (log->on_evaluation)
                for (std::size_t i = 0; i < scores.size(); ++i)
                    log->on_evaluation({search_label, generation, i, scores[i]});
            if (log->on_generation)
                log->on_generation({search_label, search_id, generation, scores[gen_best], out.score,
                                    scores.size()});
        }

        const bool done =
            protocol.matrix_search.mode == SearchBudget::Mode::generations
                ? static_cast<std::int64_t>(generation + 1) >= protocol.matrix_search.limit
                : std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started)
                          .count() >= protocol.matrix_search.limit;
        if (done) break;

        const CmcsConfig generation_best = population[gen_best];
        std::vector<CmcsConfig> next;
        next.reserve(population_size);
        for (std::size_t i = 0; i < protocol.children_of_generation_best; ++i)
            next.push_back(mutate_configuration(generation_best, rng));
        for (std::size_t i = 0; i < protocol.children_of_global_best; ++i)
            next.push_back(mutate_configuration(out.best, rng));
        population = std::move(next);
    }
    return out;
}

namespace detail {

template <Domain D>
std::vector<std::string> subset_names(const ComponentPool<D>& pool, const Subset& subset) {
    std::vector<std::string> names;
    for (std::size_t idx : subset) names.push_back(pool.components()[idx].name);
    return names;
}

template <TrainableDomain D>
double validation_score(const ComponentPool<D>& pool, const SolverSpec& spec,
                        const EvaluationSet<D>& validation, const TrainingProtocol& protocol) {
    // Every candidate sees the same seeds per validation instance.
    return evaluate_population<D>(pool, {spec}, validation, protocol.per_run_budget,
                                  protocol.scoring, protocol.workers,
                                  [&](std::size_t, std::size_t inst) {
                                      return derive_seed(protocol.seed, {seed_tag::kValidation, inst});
                                  })
        .front();
}

inline std::size_t select_winner(const std::vector<LeaderboardEntry>& board) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < board.size(); ++i)
        if (board[i].validation_score < board[best].validation_score) best = i;
    return best;
}

inline double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace detail

// Strategy A or B: one matrix search per meaningful subset of `size`
// components, then validation-based selection. For B the VND list comes
// from protocol.vnd and is not searched.
template <TrainableDomain D>
ConfiguratorResult configure_single_stage(const ComponentPool<D>& pool, std::size_t size,
                                          Strategy strategy, const TrainingProtocol& protocol,
                                          const EvaluationSet<D>& training,
                                          const EvaluationSet<D>& validation,
                                          const TrainingLog* log = nullptr) {
    require(strategy != Strategy::C, "use configure_strategy_c for strategy C");
    const auto started = std::chrono::steady_clock::now();
    const auto kinds = pool.kinds();
    const auto subsets = enumerate_meaningful_subsets(kinds, size);
    require(!subsets.empty(), "the pool has no meaningful subsets of this size");

    auto wrap = [&](const CmcsConfig& c) {
        SolverSpec spec;
        spec.strategy = strategy;
        spec.config = c;
        spec.vnd = protocol.vnd;
        spec.vnd_threshold = protocol.vnd_threshold;
        return spec;
    };

    ConfiguratorResult result;
    std::vector<SolverSpec> finalists;
    for (std::size_t id = 0; id < subsets.size(); ++id) {
        const auto names = detail::subset_names(pool, subsets[id]);
        const auto search = optimize_matrices<D>(pool, names, wrap, training, protocol, id,
                                                 "subset " + std::to_string(id), {}, log);
        const auto spec = wrap(search.best);
        LeaderboardEntry entry;
        entry.sub1 = names;
        entry.training_score = search.score;
        entry.validation_score = detail::validation_score<D>(pool, spec, validation, protocol);
        entry.evaluations = search.evaluations;
        result.leaderboard.push_back(std::move(entry));
        finalists.push_back(spec);
    }
    result.winner_index = detail::select_winner(result.leaderboard);
    result.winner = finalists[result.winner_index];
    result.wall_seconds = detail::seconds_since(started);
    return result;
}

// Strategy C: for every ordered pair of meaningful subsets, three
// alternating matrix searches (sub1 alone, sub2 with sub1 frozen, sub1 again
// with sub2 frozen), then validation-based selection.
template <TrainableDomain D>
ConfiguratorResult configure_strategy_c(const ComponentPool<D>& pool, std::size_t size,
                                        const TrainingProtocol& protocol,
                                        const EvaluationSet<D>& training,
                                        const EvaluationSet<D>& validation,
                                        const TrainingLog* log = nullptr) {
    const auto started = std::chrono::steady_clock::now();
    const auto kinds = pool.kinds();
    const auto subsets = enumerate_meaningful_subsets(kinds, size);
    require(!subsets.empty(), "the pool has no meaningful subsets of this size");
    const auto pairs = subset_pairs(subsets.size(), protocol.distinct_pairs);
    require(!pairs.empty(), "no subset pairs to train");

    auto two_stage = [&](const CmcsConfig& a, const CmcsConfig& b) {
        SolverSpec spec;
        spec.strategy = Strategy::C;
        spec.config = TwoStageConfig{a, b, protocol.split};
        return spec;
    };

    TrainingProtocol stage_one = protocol;
    if (protocol.stage_one == StageOneMode::split_budget) {
        stage_one.per_run_budget.limit = std::max<std::int64_t>(
            1, std::llround(protocol.split * static_cast<double>(protocol.per_run_budget.limit)));
    }

    ConfiguratorResult result;
    std::vector<SolverSpec> finalists;
    for (std::size_t id = 0; id < pairs.size(); ++id) {
        const auto names1 = detail::subset_names(pool, subsets[pairs[id].first]);
        const auto names2 = detail::subset_names(pool, subsets[pairs[id].second]);
        const std::string label = "pair " + std::to_string(id);
        const std::size_t base = 3 * id;

        const auto s1 = optimize_matrices<D>(
            pool, names1,
            [](const CmcsConfig& c) {
                SolverSpec spec;
                spec.strategy = Strategy::A;
                spec.config = c;
                return spec;
            },
            training, stage_one, base, label + " stage 1", {}, log);

        const auto s2 = optimize_matrices<D>(
            pool, names2, [&](const CmcsConfig& c) { return two_stage(s1.best, c); }, training,
            protocol, base + 1, label + " stage 2", {}, log);

        const auto s3 = optimize_matrices<D>(
            pool, names1, [&](const CmcsConfig& c) { return two_stage(c, s2.best); }, training,
            protocol, base + 2, label + " stage 3", {s1.best}, log);

        const auto spec = two_stage(s3.best, s2.best);
        LeaderboardEntry entry;
        entry.sub1 = names1;
        entry.sub2 = names2;
        entry.training_score = s3.score;
        entry.validation_score = detail::validation_score<D>(pool, spec, validation, protocol);
        entry.evaluations = s1.evaluations + s2.evaluations + s3.evaluations;
        result.leaderboard.push_back(std::move(entry));
        finalists.push_back(spec);
    }
    result.winner_index = detail::select_winner(result.leaderboard);
    result.winner = finalists[result.winner_index];
    result.wall_seconds = detail::seconds_since(started);
    return result;
}

}  // namespace cmcs
