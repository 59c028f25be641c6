#include "cmcs/config.hpp"

#include <string>

#include "cmcs/errors.hpp"

namespace cmcs {

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::A:
        return "A";
    case Strategy::B:
        return "B";
    case Strategy::C:
        return "C";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "A" || text == "a") return Strategy::A;
    if (text == "B" || text == "b") return Strategy::B;
    if (text == "C" || text == "c") return Strategy::C;
    throw ContractViolation("unknown strategy '" + std::string(text) + "'");
}

void validate(const CmcsConfig& cfg) {
    require(!cfg.components.empty(), "configuration has no components");
    require(cfg.m_succ.size() == cfg.size() && cfg.m_fail.size() == cfg.size(),
            "transition matrix size does not match component count");
    require(cfg.m_succ.is_valid(), "M_succ violates row-sum or discretization invariants");
    require(cfg.m_fail.is_valid(), "M_fail violates row-sum or discretization invariants");
}

void validate(const TwoStageConfig& cfg) {
    validate(cfg.sub1);
    validate(cfg.sub2);
    require(cfg.split > 0.0 && cfg.split <= 1.0, "split must lie in (0, 1]");
}

void validate(const SolverSpec& spec) {
    if (spec.strategy == Strategy::C) {
        require(std::holds_alternative<TwoStageConfig>(spec.config),
                "strategy C needs a two-stage configuration");
        validate(spec.two_stage());
        return;
    }
    require(std::holds_alternative<CmcsConfig>(spec.config),
            "strategies A and B need a single-stage configuration");
    validate(spec.single());
    if (spec.strategy == Strategy::B) {
        require(!spec.vnd.empty(), "strategy B needs a non-empty VND list");
        require(spec.vnd_threshold >= 0.0 && spec.vnd_threshold <= 1.0,
                "vnd threshold must lie in [0, 1]");
    }
}

}  // namespace cmcs
