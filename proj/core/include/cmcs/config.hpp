#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cmcs/transition_matrix.hpp"

namespace cmcs {

enum class Strategy { A, B, C };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

// Component subset plus the two control matrices. Component names are
// resolved against a pool at run time.
struct CmcsConfig {
    std::vector<std::string> components;
    TransitionMatrix m_succ;
    TransitionMatrix m_fail;

    std::size_t size() const { return components.size(); }

    friend bool operator==(const CmcsConfig&, const CmcsConfig&) = default;
};

// Two sub-configurations run back to back; sub1 gets `split` of the budget.
struct TwoStageConfig {
    CmcsConfig sub1;
    CmcsConfig sub2;
    double split = 0.8;

    friend bool operator==(const TwoStageConfig&, const TwoStageConfig&) = default;
};

// Everything needed to launch one run of any strategy.
struct SolverSpec {
    Strategy strategy = Strategy::A;
    std::variant<CmcsConfig, TwoStageConfig> config;
    std::vector<std::string> vnd;  // Strategy B only
    double vnd_threshold = 0.5;    // Strategy B only
    bool faithful_b = false;       // return S*_best literally (Strategy B only)

    const CmcsConfig& single() const { return std::get<CmcsConfig>(config); }
    const TwoStageConfig& two_stage() const { return std::get<TwoStageConfig>(config); }
};

// Structural checks only (sizes, matrix invariants, split range). Component
// kinds are checked when names are resolved against a pool.
void validate(const CmcsConfig& cfg);
void validate(const TwoStageConfig& cfg);
void validate(const SolverSpec& spec);

}  // namespace cmcs
