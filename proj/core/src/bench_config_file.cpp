#include "bench/config_file.hpp"

#include <fstream>
#include <sstream>

#include "cmcs/errors.hpp"
#include "json.hpp"

namespace bench {

using json = nlohmann::ordered_json;
using cmcs::IoError;

std::string read_text(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot write " + path.string());
    os << text;
    if (!os) throw IoError("failed writing " + path.string());
}

namespace {

json sub_to_json(const cmcs::CmcsConfig& c) {
    json j;
    j["components"] = c.components;
    j["denominator"] = c.m_succ.denominator();
    j["m_succ"] = c.m_succ.rows();
    j["m_fail"] = c.m_fail.rows();
    return j;
}

cmcs::CmcsConfig sub_from_json(const json& j) {
    cmcs::CmcsConfig c;
    c.components = j.at("components").get<std::vector<std::string>>();
    const int denominator = j.at("denominator").get<int>();
    if (denominator != static_cast<int>(c.components.size()))
        throw IoError("denominator must equal the number of components");
    c.m_succ = cmcs::TransitionMatrix::from_rows(j.at("m_succ").get<std::vector<std::vector<int>>>());
    c.m_fail = cmcs::TransitionMatrix::from_rows(j.at("m_fail").get<std::vector<std::vector<int>>>());
    cmcs::validate(c);
    return c;
}

json budget_to_json(const cmcs::Budget& b) {
    return json{{"mode", std::string(cmcs::to_string(b.mode))}, {"limit", b.limit}};
}

cmcs::Budget budget_from_json(const json& j) {
    const auto mode = j.at("mode").get<std::string>();
    cmcs::Budget b;
    if (mode == "iterations")
        b.mode = cmcs::BudgetMode::iterations;
    else if (mode == "wall-clock")
        b.mode = cmcs::BudgetMode::wall_clock;
    else
        throw IoError("unknown budget mode '" + mode + "'");
    b.limit = j.at("limit").get<std::int64_t>();
    return b;
}

json provenance_to_json(const Provenance& p) {
    json j;
    j["tool_version"] = p.tool_version;
    j["seed"] = p.seed;
    j["per_run_budget"] = budget_to_json(p.per_run_budget);
    j["matrix_search"] = p.matrix_search;
    j["scoring"] = p.scoring;
    j["pool"] = p.pool;
    j["subset_size"] = p.subset_size;
    j["notes"] = p.notes;
    return j;
}

Provenance provenance_from_json(const json& j) {
    Provenance p;
    p.tool_version = j.value("tool_version", std::string(kToolVersion));
    p.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("per_run_budget")) p.per_run_budget = budget_from_json(j.at("per_run_budget"));
    p.matrix_search = j.value("matrix_search", std::string());
    p.scoring = j.value("scoring", std::string());
    p.pool = j.value("pool", std::vector<std::string>{});
    p.subset_size = j.value("subset_size", std::size_t{0});
    p.notes = j.value("notes", std::string());
    return p;
}

}  // namespace

std::string to_json(const ConfigFile& file) {
    const auto& spec = file.spec;
    json j;
    j["strategy"] = std::string(cmcs::to_string(spec.strategy));
    if (spec.strategy == cmcs::Strategy::C) {
        const auto& two = spec.two_stage();
        j["split"] = two.split;
        j["sub1"] = sub_to_json(two.sub1);
        j["sub2"] = sub_to_json(two.sub2);
    } else {
        const json sub = sub_to_json(spec.single());
        for (const auto& [key, value] : sub.items()) j[key] = value;
        if (spec.strategy == cmcs::Strategy::B) {
            j["vnd"] = spec.vnd;
            j["vnd_threshold"] = spec.vnd_threshold;
        }
    }
    j["provenance"] = provenance_to_json(file.provenance);
    return j.dump(2) + "\n";
}

ConfigFile config_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        ConfigFile file;
        auto& spec = file.spec;
        spec.strategy = cmcs::parse_strategy(j.at("strategy").get<std::string>());
        if (spec.strategy == cmcs::Strategy::C) {
            cmcs::TwoStageConfig two;
            two.split = j.value("split", 0.8);
            two.sub1 = sub_from_json(j.at("sub1"));
            two.sub2 = sub_from_json(j.at("sub2"));
            spec.config = std::move(two);
        } else {
            spec.config = sub_from_json(j);
            if (spec.strategy == cmcs::Strategy::B) {
                spec.vnd = j.at("vnd").get<std::vector<std::string>>();
                spec.vnd_threshold = j.value("vnd_threshold", 0.5);
            }
        }
        if (j.contains("provenance")) file.provenance = provenance_from_json(j.at("provenance"));
        cmcs::validate(spec);
        return file;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed configuration: ") + e.what());
    }
}

void save_config(const std::filesystem::path& path, const ConfigFile& file) {
    write_text(path, to_json(file));
}

ConfigFile load_config(const std::filesystem::path& path) {
    return config_from_json(read_text(path));
}

}  // namespace bench
