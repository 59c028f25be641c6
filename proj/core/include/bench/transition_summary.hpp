#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmcs/config.hpp"
#include "cmcs/run_result.hpp"

namespace bench {

// One arc of a configuration diagram: the configured probability
// numerator/denominator and, if a run was supplied, how often the chain
// actually took the arc given the outcome.
struct TransitionArc {
    std::size_t phase = 1;  // sub-configuration (2 only for Strategy C)
    std::string from;
    std::string to;
    bool success = true;
    int numerator = 0;
    int denominator = 1;
    std::optional<std::uint64_t> observed_count;
    std::optional<double> observed_frequency;  // count / all `from` departures with this outcome
};

// Arcs in (phase, from, outcome succ then fail, to) order. `observed` is
// the RunResult::transitions of a run of the same configuration.
std::vector<TransitionArc> transition_summary(const cmcs::SolverSpec& spec,
                                              const std::vector<cmcs::TransitionCounts>* observed);

// CSV: phase,from,to,outcome,numerator,denominator,probability,
//      observed_count,observed_frequency (last two empty without a run).
std::string arcs_to_csv(const std::vector<TransitionArc>& arcs);

}  // namespace bench
