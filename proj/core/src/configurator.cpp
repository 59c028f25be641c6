#include "cmcs/configurator.hpp"

namespace cmcs {

std::string_view to_string(Scoring s) {
    return s == Scoring::mean_objective ? "mean-objective" : "mean-relative-error";
}

Scoring parse_scoring(std::string_view text) {
    if (text == "mean-objective") return Scoring::mean_objective;
    if (text == "mean-relative-error") return Scoring::mean_relative_error;
    throw ContractViolation("unknown scoring '" + std::string(text) + "'");
}

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ',';
        out += n;
    }
    return out;
}

}  // namespace

std::string LeaderboardEntry::label() const {
    return sub2.empty() ? join(sub1) : join(sub1) + " | " + join(sub2);
}

}  // namespace cmcs
