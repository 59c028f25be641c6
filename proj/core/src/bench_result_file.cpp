#include "bench/result_file.hpp"

#include "bench/config_file.hpp"
#include "cmcs/errors.hpp"
#include "json.hpp"

namespace bench {

using json = nlohmann::ordered_json;

namespace {

cmcs::BudgetMode parse_mode(const std::string& mode) {
    if (mode == "iterations") return cmcs::BudgetMode::iterations;
    if (mode == "wall-clock") return cmcs::BudgetMode::wall_clock;
    throw cmcs::IoError("unknown budget mode '" + mode + "'");
}

std::vector<std::vector<std::uint64_t>> square(const std::vector<std::uint64_t>& flat,
                                                std::size_t n) {
    std::vector<std::vector<std::uint64_t>> rows(n);
    for (std::size_t r = 0; r < n; ++r)
        rows[r].assign(flat.begin() + static_cast<std::ptrdiff_t>(r * n),
                       flat.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
    return rows;
}

std::vector<std::uint64_t> flatten(const std::vector<std::vector<std::uint64_t>>& rows,
                                   std::size_t n) {
    std::vector<std::uint64_t> flat;
    for (const auto& row : rows) {
        if (row.size() != n) throw cmcs::IoError("transition count table must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    if (rows.size() != n) throw cmcs::IoError("transition count table must be square");
    return flat;
}

}  // namespace

std::string to_json(const ResultRecord& record) {
    const auto& r = record.result;
    json j;
    j["instance"] = record.instance;
    j["strategy"] = record.strategy;
    j["seed"] = record.seed;
    j["budget"] = {{"mode", std::string(cmcs::to_string(record.budget.mode))},
                   {"limit", record.budget.limit}};
    j["best_objective"] = r.best_objective;
    j["iterations"] = r.iterations_executed;
    j["stamp_unit"] = r.stamp_unit == cmcs::BudgetMode::iterations ? "applications" : "microseconds";
    json trace = json::array();
    for (const auto& p : r.trace) trace.push_back({p.stamp, p.objective});
    j["trace"] = std::move(trace);
    json assignment = json::array();
    for (const auto& pair : r.best_solution.pairs) assignment.push_back({pair.j + 1, pair.k + 1});
    j["assignment"] = std::move(assignment);
    json transitions = json::array();
    for (const auto& t : r.transitions)
        transitions.push_back({{"succ", square(t.succ, t.size)}, {"fail", square(t.fail, t.size)}});
    j["transitions"] = std::move(transitions);
    return j.dump(2) + "\n";
}

ResultRecord result_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        ResultRecord rec;
        rec.instance = j.at("instance").get<std::string>();
        rec.strategy = j.at("strategy").get<std::string>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.budget.mode = parse_mode(j.at("budget").at("mode").get<std::string>());
        rec.budget.limit = j.at("budget").at("limit").get<std::int64_t>();
        auto& r = rec.result;
        r.best_objective = j.at("best_objective").get<cmcs::Objective>();
        r.iterations_executed = j.at("iterations").get<std::int64_t>();
        r.stamp_unit = j.at("stamp_unit").get<std::string>() == "applications"
                           ? cmcs::BudgetMode::iterations
                           : cmcs::BudgetMode::wall_clock;
        for (const auto& p : j.at("trace"))
            r.trace.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<cmcs::Objective>()});
        for (const auto& pair : j.at("assignment"))
            r.best_solution.pairs.push_back({pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1});
        for (const auto& t : j.at("transitions")) {
            const auto succ = t.at("succ").get<std::vector<std::vector<std::uint64_t>>>();
            const auto fail = t.at("fail").get<std::vector<std::vector<std::uint64_t>>>();
            cmcs::TransitionCounts counts(succ.size());
            counts.succ = flatten(succ, succ.size());
            counts.fail = flatten(fail, succ.size());
            r.transitions.push_back(std::move(counts));
        }
        return rec;
    } catch (const json::exception& e) {
        throw cmcs::IoError(std::string("malformed result record: ") + e.what());
    }
}

void save_result(const std::filesystem::path& path, const ResultRecord& record) {
    write_text(path, to_json(record));
}

ResultRecord load_result(const std::filesystem::path& path) {
    return result_from_json(read_text(path));
}

}  // namespace bench
