#include "bench/transition_summary.hpp"

#include "bench/error_curve.hpp"
#include "cmcs/errors.hpp"

namespace bench {

namespace {

void add_phase(std::vector<TransitionArc>& out, std::size_t phase, const cmcs::CmcsConfig& cfg,
               const cmcs::TransitionCounts* counts) {
    const std::size_t n = cfg.size();
    if (counts != nullptr)
        cmcs::require(counts->size == n, "observed transition table does not match the configuration");
    for (std::size_t from = 0; from < n; ++from) {
        for (bool success : {true, false}) {
            const auto& m = success ? cfg.m_succ : cfg.m_fail;
            std::uint64_t departures = 0;
            if (counts != nullptr)
                for (std::size_t to = 0; to < n; ++to) departures += counts->at(from, to, success);
            for (std::size_t to = 0; to < n; ++to) {
                TransitionArc arc;
                arc.phase = phase;
                arc.from = cfg.components[from];
                arc.to = cfg.components[to];
                arc.success = success;
                arc.numerator = m.at(from, to);
                arc.denominator = m.denominator();
                if (counts != nullptr) {
                    arc.observed_count = counts->at(from, to, success);
                    if (departures > 0)
                        arc.observed_frequency = static_cast<double>(*arc.observed_count) /
                                                 static_cast<double>(departures);
                }
                out.push_back(std::move(arc));
            }
        }
    }
}

}  // namespace

std::vector<TransitionArc> transition_summary(const cmcs::SolverSpec& spec,
                                              const std::vector<cmcs::TransitionCounts>* observed) {
    cmcs::validate(spec);
    auto table = [&](std::size_t i) -> const cmcs::TransitionCounts* {
        return observed != nullptr && i < observed->size() ? &(*observed)[i] : nullptr;
    };
    std::vector<TransitionArc> arcs;
    if (spec.strategy == cmcs::Strategy::C) {
        add_phase(arcs, 1, spec.two_stage().sub1, table(0));
        add_phase(arcs, 2, spec.two_stage().sub2, table(1));
    } else {
        add_phase(arcs, 1, spec.single(), table(0));
    }
    return arcs;
}

std::string arcs_to_csv(const std::vector<TransitionArc>& arcs) {
    std::string out =
        "phase,from,to,outcome,numerator,denominator,probability,observed_count,observed_frequency\n";
    for (const auto& a : arcs) {
        out += std::to_string(a.phase) + ',' + a.from + ',' + a.to + ',' +
               (a.success ? "succ" : "fail") + ',' + std::to_string(a.numerator) + ',' +
               std::to_string(a.denominator) + ',' +
               format_double(static_cast<double>(a.numerator) / a.denominator) + ',';
        if (a.observed_count) out += std::to_string(*a.observed_count);
        out += ',';
        if (a.observed_frequency) out += format_double(*a.observed_frequency);
        out += '\n';
    }
    return out;
}

}  // namespace bench
