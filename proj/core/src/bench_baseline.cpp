#include "bench/baseline.hpp"

#include "bench/config_file.hpp"
#include "cmcs/errors.hpp"
#include "json.hpp"

namespace bench {

using json = nlohmann::ordered_json;

cmcs::Objective BaselineTable::at(const std::string& name) const {
    const auto it = entries.find(name);
    cmcs::require(it != entries.end(), "baseline has no entry for instance '" + name + "'");
    return it->second;
}

void BaselineTable::update(const std::string& name, cmcs::Objective objective) {
    const auto [it, inserted] = entries.emplace(name, objective);
    if (!inserted && objective < it->second) it->second = objective;
}

std::string to_json(const BaselineTable& table) {
    json j;
    j["provenance"] = {{"method", table.method},
                       {"budget",
                        {{"mode", std::string(cmcs::to_string(table.budget.mode))},
                         {"limit", table.budget.limit}}},
                       {"seed", table.seed},
                       {"repeats", table.repeats}};
    json entries = json::object();
    for (const auto& [name, objective] : table.entries) entries[name] = objective;
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

BaselineTable baseline_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        BaselineTable t;
        const auto& p = j.at("provenance");
        t.method = p.at("method").get<std::string>();
        const auto& b = p.at("budget");
        const auto mode = b.at("mode").get<std::string>();
        t.budget.mode = mode == "iterations" ? cmcs::BudgetMode::iterations
                                             : cmcs::BudgetMode::wall_clock;
        t.budget.limit = b.at("limit").get<std::int64_t>();
        t.seed = p.at("seed").get<std::uint64_t>();
        t.repeats = p.at("repeats").get<std::size_t>();
        for (const auto& [name, value] : j.at("entries").items()) {
            const auto objective = value.get<cmcs::Objective>();
            if (objective <= 0) throw cmcs::IoError("baseline objective for '" + name + "' must be positive");
            t.entries.emplace(name, objective);
        }
        return t;
    } catch (const json::exception& e) {
        throw cmcs::IoError(std::string("malformed baseline table: ") + e.what());
    }
}

void save_baseline(const std::filesystem::path& path, const BaselineTable& table) {
    write_text(path, to_json(table));
}

BaselineTable load_baseline(const std::filesystem::path& path) {
    return baseline_from_json(read_text(path));
}

double error_percent(cmcs::Objective f, cmcs::Objective reference) {
    cmcs::require(reference > 0, "reference objective must be positive");
    return 100.0 * static_cast<double>(f - reference) / static_cast<double>(reference);
}

}  // namespace bench
