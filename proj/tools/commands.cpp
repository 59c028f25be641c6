#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ap3/components.hpp"
#include "ap3/instance_io.hpp"
#include "bench/baseline.hpp"
#include "bench/config_file.hpp"
#include "bench/error_curve.hpp"
#include "bench/result_file.hpp"
#include "bench/transition_summary.hpp"
#include "cmcs/configurator.hpp"
#include "cmcs/planner.hpp"

namespace cli {

namespace fs = std::filesystem;
using ap3::Instance;
using cmcs::Budget;
using cmcs::ContractViolation;
using cmcs::IoError;
using cmcs::require;
using Ap3 = ap3::Ap3Domain;

namespace {

constexpr const char* kDefaultVnd = "best-swap,all-dimension-hungarian";

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
    return out;
}

// 64-bit FNV-1a; gives every instance name a stable seed stream.
std::uint64_t name_hash(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::size_t resolve_workers(std::size_t workers) {
    return workers == 0 ? cmcs::default_workers() : workers;
}

void ensure_parent(const fs::path& file) {
    if (!file.has_parent_path()) return;
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + file.parent_path().string());
}

std::vector<fs::path> instance_files(const fs::path& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".ap3") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no .ap3 instances in " + dir.string());
    return files;
}

std::vector<Instance> load_dir(const fs::path& dir) {
    std::vector<Instance> out;
    for (const auto& f : instance_files(dir)) out.push_back(ap3::load_instance(f));
    return out;
}

// Output goes to a file when a path is given, else to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path.empty()) return;
        ensure_parent(path);
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw IoError("cannot write " + path);
        os_ = file_.get();
    }
    std::ostream& stream() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

struct BudgetFlags {
    std::int64_t ms = 0;
    std::int64_t iterations = 0;

    void add(CLI::App* app, const std::string& what) {
        auto* a = app->add_option("--budget-ms", ms, what + " in milliseconds of wall-clock time")
                      ->check(CLI::PositiveNumber);
        auto* b = app->add_option("--budget-iters", iterations, what + " in component applications")
                      ->check(CLI::PositiveNumber);
        a->excludes(b);
    }

    Budget resolve(std::int64_t default_ms) const {
        if (iterations > 0) return Budget::iterations(iterations);
        return Budget::millis(ms > 0 ? ms : default_ms);
    }
};

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string families = "random,clique,sqrt";
    std::vector<int> sizes{40};
    int count = 4;
    std::uint64_t seed = 0;
    std::string out;
    bool sqrt_exact = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const auto families = split_list(a.families);
    require(!families.empty(), "no instance families given");
    require(a.count >= 1, "--count must be at least 1");
    std::error_code ec;
    fs::create_directories(a.out, ec);
    if (ec) throw IoError("cannot create directory " + a.out);
    const int width = std::max<int>(2, static_cast<int>(std::to_string(a.count - 1).size()));
    std::size_t written = 0;
    for (const auto& token : families) {
        const auto family = ap3::parse_family(token);
        require(family != ap3::Family::external, "external instances cannot be generated");
        const auto stored = a.sqrt_exact && family == ap3::Family::square_root
                                ? ap3::Family::square_root_exact
                                : family;
        for (int n : a.sizes) {
            require(n >= 1, "instance sizes must be positive");
            for (int idx = 0; idx < a.count; ++idx) {
                // the seed ignores --sqrt-exact so both variants share edge weights
                const auto seed = cmcs::derive_seed(
                    a.seed, {static_cast<std::uint64_t>(family), static_cast<std::uint64_t>(n),
                             static_cast<std::uint64_t>(idx)});
                std::string id = std::to_string(idx);
                id.insert(0, static_cast<std::size_t>(std::max<int>(0, width - static_cast<int>(id.size()))), '0');
                const std::string name =
                    std::string(ap3::to_string(stored)) + "-" + std::to_string(n) + "-" + id;
                ap3::save_instance(fs::path(a.out) / (name + ".ap3"),
                                   ap3::generate_instance(stored, n, seed, name));
                ++written;
            }
        }
    }
    out << "wrote " << written << " instances to " << a.out << '\n';
    return 0;
}

// ---- train -----------------------------------------------------------------

struct TrainArgs {
    std::string strategy;
    std::string pool = "standard";
    std::size_t subset_size = 2;
    std::string train_dir;
    std::string valid_dir;
    BudgetFlags budget;
    std::int64_t search_ms = 0;
    std::int64_t generations = 0;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string scoring = "mean-objective";
    std::string baseline;
    std::string vnd = kDefaultVnd;
    double vnd_threshold = 0.5;
    double split = 0.8;
    bool distinct_pairs = false;
    bool stage1_split = false;
    std::string out;
    std::string leaderboard;
    std::string log;
    bool plan_only = false;
    std::size_t subsets = 0;
};

int cmd_plan(const TrainArgs& a, cmcs::Strategy strategy, std::ostream& out) {
    std::size_t subsets = a.subsets;
    if (subsets == 0) {
        const auto pool = ap3::pool_from_spec(a.pool);
        subsets = cmcs::enumerate_meaningful_subsets(pool.kinds(), a.subset_size).size();
    }
    const double minutes =
        a.search_ms > 0 ? static_cast<double>(a.search_ms) / 60000.0
                        : (strategy == cmcs::Strategy::C ? cmcs::kDefaultStageMinutes
                                                         : cmcs::kDefaultSearchMinutes);
    const auto plan = cmcs::plan_training(
        strategy, a.subset_size, cmcs::component_sets(strategy, subsets, a.distinct_pairs), minutes);
    out << "strategy,components,sets,minutes\n" << cmcs::format_plan_row(plan) << '\n';
    return 0;
}

cmcs::EvaluationSet<Ap3> make_set(const std::vector<Instance>& instances,
                                  const bench::BaselineTable* baseline) {
    cmcs::EvaluationSet<Ap3> set;
    for (const auto& inst : instances) {
        set.instances.push_back(&inst);
        if (baseline != nullptr) set.baseline.push_back(baseline->at(inst.name()));
    }
    return set;
}

std::string csv_field(const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
}

int cmd_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
    const auto strategy = cmcs::parse_strategy(a.strategy);
    if (a.plan_only) return cmd_plan(a, strategy, out);
    require(!a.train_dir.empty() && !a.valid_dir.empty(), "train needs --train and --valid");
    require(!a.out.empty(), "train needs --out");

    const auto pool = ap3::pool_from_spec(a.pool);
    const auto scoring = cmcs::parse_scoring(a.scoring);
    const auto training_instances = load_dir(a.train_dir);
    const auto validation_instances = load_dir(a.valid_dir);
    std::optional<bench::BaselineTable> baseline;
    if (!a.baseline.empty()) baseline = bench::load_baseline(a.baseline);
    require(scoring != cmcs::Scoring::mean_relative_error || baseline.has_value(),
            "mean-relative-error scoring needs --baseline");
    const auto* table = scoring == cmcs::Scoring::mean_relative_error ? &*baseline : nullptr;
    const auto training = make_set(training_instances, table);
    const auto validation = make_set(validation_instances, table);

    cmcs::TrainingProtocol protocol;
    protocol.per_run_budget = a.budget.resolve(1000);
    const bool c = strategy == cmcs::Strategy::C;
    if (a.generations > 0)
        protocol.matrix_search = cmcs::SearchBudget::generations(a.generations);
    else
        protocol.matrix_search = cmcs::SearchBudget::millis(
            a.search_ms > 0 ? a.search_ms
                            : static_cast<std::int64_t>((c ? cmcs::kDefaultStageMinutes
                                                            : cmcs::kDefaultSearchMinutes) *
                                                        60000));
    protocol.scoring = scoring;
    protocol.workers = resolve_workers(a.workers);
    protocol.seed = a.seed;
    if (strategy == cmcs::Strategy::B) protocol.vnd = split_list(a.vnd);
    protocol.vnd_threshold = a.vnd_threshold;
    protocol.split = a.split;
    protocol.distinct_pairs = a.distinct_pairs;
    protocol.stage_one = a.stage1_split ? cmcs::StageOneMode::split_budget : cmcs::StageOneMode::full_budget;
    if (strategy == cmcs::Strategy::B) {
        require(!protocol.vnd.empty(), "strategy B needs a VND list");
        const auto catalog = ap3::full_catalog();
        for (const auto& name : protocol.vnd)
            require(catalog.get(name).kind == cmcs::ComponentKind::hill_climber,
                    "VND component '" + name + "' is not a hill climber");
    }

    Sink log_sink(a.log, err);
    const bool full_log = !a.log.empty();
    cmcs::TrainingLog log;
    log.on_generation = [&](const cmcs::GenerationRecord& g) {
        log_sink.stream() << "generation search=\"" << g.search << "\" id=" << g.search_id
                          << " index=" << g.generation
                          << " generation_best=" << bench::format_double(g.generation_best)
                          << " global_best=" << bench::format_double(g.global_best) << '\n';
    };
    if (full_log)
        log.on_evaluation = [&](const cmcs::EvaluationRecord& e) {
            log_sink.stream() << "evaluation search=\"" << e.search << "\" generation=" << e.generation
                              << " member=" << e.member << " score=" << bench::format_double(e.score)
                              << '\n';
        };

    const auto result =
        c ? cmcs::configure_strategy_c<Ap3>(pool, a.subset_size, protocol, training, validation, &log)
          : cmcs::configure_single_stage<Ap3>(pool, a.subset_size, strategy, protocol, training,
                                              validation, &log);

    bench::ConfigFile file;
    file.spec = result.winner;
    file.provenance.seed = a.seed;
    file.provenance.per_run_budget = protocol.per_run_budget;
    file.provenance.matrix_search =
        protocol.matrix_search.mode == cmcs::SearchBudget::Mode::generations
            ? "generations:" + std::to_string(protocol.matrix_search.limit)
            : "ms:" + std::to_string(protocol.matrix_search.limit);
    file.provenance.scoring = std::string(cmcs::to_string(scoring));
    file.provenance.pool = pool.names();
    file.provenance.subset_size = a.subset_size;
    std::vector<std::string> notes;
    if (c) {
        notes.push_back(a.distinct_pairs ? "pairs=distinct" : "pairs=all");
        notes.push_back(a.stage1_split ? "stage1=split-budget" : "stage1=full-budget");
    }
    file.provenance.notes = join(notes, ";");
    ensure_parent(a.out);
    bench::save_config(a.out, file);

    std::ostringstream board;
    board << "index,components,training_score,validation_score,evaluations,winner\n";
    for (std::size_t i = 0; i < result.leaderboard.size(); ++i) {
        const auto& e = result.leaderboard[i];
        board << i << ',' << csv_field(e.label()) << ',' << bench::format_double(e.training_score)
              << ',' << bench::format_double(e.validation_score) << ',' << e.evaluations << ','
              << (i == result.winner_index ? 1 : 0) << '\n';
    }
    if (!a.leaderboard.empty()) {
        ensure_parent(a.leaderboard);
        bench::write_text(a.leaderboard, board.str());
    }
    out << board.str();
    const auto& w = result.leaderboard[result.winner_index];
    out << "winner: " << w.label() << " (validation " << bench::format_double(w.validation_score)
        << ")\n";
    out << "wall time: " << bench::format_double(result.wall_seconds) << " s\n";
    return 0;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string config;
    std::string instance;
    std::string strategy;
    BudgetFlags budget;
    std::uint64_t seed = 0;
    std::string out;
    bool faithful_b = false;
    std::string vnd = kDefaultVnd;
};

// Lets `solve --strategy` reinterpret a single-chain configuration.
cmcs::SolverSpec adjust_strategy(cmcs::SolverSpec spec, const std::string& requested,
                                 const std::string& vnd) {
    if (requested.empty()) return spec;
    const auto want = cmcs::parse_strategy(requested);
    if (want == spec.strategy) return spec;
    require(want != cmcs::Strategy::C && spec.strategy != cmcs::Strategy::C,
            "cannot convert between a two-stage and a single-chain configuration");
    spec.strategy = want;
    spec.vnd = want == cmcs::Strategy::B ? split_list(vnd) : std::vector<std::string>{};
    return spec;
}

bench::ResultRecord solve_once(const ap3::Pool& pool, const cmcs::SolverSpec& spec,
                               const Instance& inst, Budget budget, std::uint64_t seed) {
    cmcs::Rng rng(seed);
    const auto s0 = Ap3::initial_solution(inst, rng);
    bench::ResultRecord rec;
    rec.instance = inst.name();
    rec.strategy = std::string(cmcs::to_string(spec.strategy));
    rec.seed = seed;
    rec.budget = budget;
    rec.result = cmcs::run<Ap3>(pool, spec, inst, s0, budget, rng);
    return rec;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    auto spec = adjust_strategy(bench::load_config(a.config).spec, a.strategy, a.vnd);
    if (a.faithful_b) spec.faithful_b = true;
    const auto inst = ap3::load_instance(a.instance);
    const auto rec = solve_once(ap3::full_catalog(), spec, inst, a.budget.resolve(1000), a.seed);
    if (!a.out.empty()) {
        ensure_parent(a.out);
        bench::save_result(a.out, rec);
    }
    out << "instance " << rec.instance << " strategy " << rec.strategy << " best_objective "
        << rec.result.best_objective << " iterations " << rec.result.iterations_executed
        << " improvements " << rec.result.trace.size() - 1 << '\n';
    return 0;
}

// ---- baseline --------------------------------------------------------------

struct BaselineArgs {
    std::string instances;
    BudgetFlags budget;
    std::size_t repeats = 3;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string out;
};

// Strong default: random swap and all-dimension Hungarian, alternating.
cmcs::SolverSpec baseline_spec() {
    const auto m = cmcs::TransitionMatrix::from_rows({{0, 2}, {2, 0}});
    cmcs::SolverSpec spec;
    spec.config = cmcs::CmcsConfig{{ap3::names::kRandomSwap, ap3::names::kAllDimension}, m, m};
    return spec;
}

int cmd_baseline(const BaselineArgs& a, std::ostream& out) {
    require(a.repeats >= 1, "--repeats must be at least 1");
    const auto instances = load_dir(a.instances);
    const auto budget = a.budget.resolve(5000);
    const auto spec = baseline_spec();
    const auto pool = ap3::standard_pool();
    std::vector<cmcs::Objective> best(instances.size() * a.repeats);
    cmcs::parallel_for(best.size(), resolve_workers(a.workers), [&](std::size_t task) {
        const auto& inst = instances[task / a.repeats];
        const auto seed = cmcs::derive_seed(a.seed, {name_hash(inst.name()), task % a.repeats});
        best[task] = solve_once(pool, spec, inst, budget, seed).result.best_objective;
    });
    bench::BaselineTable table;
    table.method = "A random-swap,all-dimension-hungarian alternating";
    table.budget = budget;
    table.seed = a.seed;
    table.repeats = a.repeats;
    for (std::size_t t = 0; t < best.size(); ++t) table.update(instances[t / a.repeats].name(), best[t]);
    if (!a.out.empty()) {
        ensure_parent(a.out);
        bench::save_baseline(a.out, table);
    }
    for (const auto& [name, f] : table.entries) out << name << ' ' << f << '\n';
    return 0;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
    std::vector<std::string> configs;
    std::string labels;
    std::string instances;
    std::string baseline;
    BudgetFlags budget;
    std::size_t repeats = 1;
    std::uint64_t seed = 0;
    std::size_t points = 20;
    double grid_start = 0.01;
    std::size_t workers = 0;
    std::string out;
    std::string results_dir;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    require(a.repeats >= 1, "--repeats must be at least 1");
    std::vector<cmcs::SolverSpec> specs;
    std::vector<std::string> labels = split_list(a.labels);
    for (std::size_t i = 0; i < a.configs.size(); ++i) {
        specs.push_back(bench::load_config(a.configs[i]).spec);
        if (labels.size() <= i) labels.push_back(fs::path(a.configs[i]).stem().string());
    }
    require(labels.size() == specs.size(), "one label per configuration expected");
    const auto instances = load_dir(a.instances);
    const auto table = bench::load_baseline(a.baseline);
    std::vector<cmcs::Objective> reference;
    for (const auto& inst : instances) reference.push_back(table.at(inst.name()));

    const auto budget = a.budget.resolve(1000);
    const bool clock = budget.mode == cmcs::BudgetMode::wall_clock;
    const double last = clock ? static_cast<double>(budget.limit) / 1000.0 : static_cast<double>(budget.limit);
    const double first = clock ? std::min(a.grid_start, last) : 1.0;
    const auto grid = bench::log_grid(first, last, a.points);

    const std::size_t per_config = instances.size() * a.repeats;
    std::vector<bench::ResultRecord> records(specs.size() * per_config);
    const auto pool = ap3::full_catalog();
    cmcs::parallel_for(records.size(), resolve_workers(a.workers), [&](std::size_t task) {
        const std::size_t c = task / per_config;
        const std::size_t i = (task % per_config) / a.repeats;
        const std::size_t r = task % a.repeats;
        // common random numbers: every configuration sees the same seeds
        const auto seed = cmcs::derive_seed(a.seed, {name_hash(instances[i].name()), r});
        records[task] = solve_once(pool, specs[c], instances[i], budget, seed);
    });

    std::vector<bench::ErrorCurve> curves;
    for (std::size_t c = 0; c < specs.size(); ++c) {
        bench::ErrorCurve curve(labels[c], grid, clock ? 1e6 : 1.0);
        for (std::size_t k = 0; k < per_config; ++k)
            curve.add_run(records[c * per_config + k].result.trace, reference[k / a.repeats]);
        curves.push_back(std::move(curve));
    }
    if (!a.results_dir.empty()) {
        for (std::size_t t = 0; t < records.size(); ++t) {
            const auto& rec = records[t];
            const auto file = labels[t / per_config] + "__" + rec.instance + "__r" +
                              std::to_string(t % a.repeats) + ".json";
            const auto path = fs::path(a.results_dir) / file;
            ensure_parent(path);
            bench::save_result(path, rec);
        }
    }

    Sink sink(a.out, out);
    sink.stream() << bench::curves_to_csv(clock ? "seconds" : "applications", curves);
    auto& summary = a.out.empty() ? err : out;
    for (const auto& c : curves)
        summary << c.label() << " final_error " << bench::format_double(c.final_error()) << '\n';
    return 0;
}

// ---- export-config ---------------------------------------------------------

struct ExportArgs {
    std::string config;
    std::string result;
    std::string out;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
    const auto file = bench::load_config(a.config);
    std::optional<bench::ResultRecord> rec;
    if (!a.result.empty()) rec = bench::load_result(a.result);
    const auto arcs = bench::transition_summary(file.spec, rec ? &rec->result.transitions : nullptr);
    Sink sink(a.out, out);
    sink.stream() << bench::arcs_to_csv(arcs);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conditional Markov Chain Search for the three-index assignment problem", "cmcs"};
    app.set_version_flag("--version", bench::kToolVersion);
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate AP3 instances");
    g->add_option("--families", gen.families, "comma-separated: random, clique, sqrt")
        ->capture_default_str();
    g->add_option("--sizes,--size", gen.sizes, "instance sizes")->delimiter(',')->capture_default_str();
    g->add_option("--count", gen.count, "instances per family and size")->capture_default_str();
    g->add_option("--seed", gen.seed, "master seed")->capture_default_str();
    g->add_option("--out", gen.out, "output directory")->required();
    g->add_flag("--sqrt-exact", gen.sqrt_exact, "keep square-root costs at 1e-6 resolution");

    TrainArgs train;
    auto* t = app.add_subcommand("train", "learn a configuration");
    t->add_option("--strategy", train.strategy, "A, B or C")->required();
    t->add_option("--pool", train.pool, "standard, all, or a comma-separated component list")
        ->capture_default_str();
    t->add_option("--subset-size", train.subset_size, "components per configuration")
        ->capture_default_str();
    t->add_option("--train", train.train_dir, "training instance directory");
    t->add_option("--valid", train.valid_dir, "validation instance directory");
    train.budget.add(t, "per-run budget (default 1000 ms)");
    auto* sm = t->add_option("--search-ms", train.search_ms,
                             "matrix search budget per subset (A, B) or stage (C)")
                   ->check(CLI::PositiveNumber);
    auto* gn = t->add_option("--generations", train.generations, "matrix search length in generations")
                   ->check(CLI::PositiveNumber);
    sm->excludes(gn);
    t->add_option("--seed", train.seed, "master seed")->capture_default_str();
    t->add_option("--workers", train.workers, "parallel runs (0 = all cores)")->capture_default_str();
    t->add_option("--scoring", train.scoring, "mean-objective or mean-relative-error")
        ->capture_default_str();
    t->add_option("--baseline", train.baseline, "baseline table for relative-error scoring");
    t->add_option("--vnd", train.vnd, "VND hill climbers for strategy B")->capture_default_str();
    t->add_option("--vnd-threshold", train.vnd_threshold, "budget fraction before VND may run")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    t->add_option("--split", train.split, "strategy C phase-1 budget fraction")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    t->add_flag("--distinct-pairs", train.distinct_pairs, "strategy C: skip pairs of identical subsets");
    t->add_flag("--stage1-split", train.stage1_split,
                "strategy C: score stage 1 over split * budget instead of the full budget");
    t->add_option("--out", train.out, "configuration file to write");
    t->add_option("--leaderboard", train.leaderboard, "leaderboard CSV to write");
    t->add_option("--log", train.log, "training log file (generations and evaluations)");
    t->add_flag("--plan-only", train.plan_only, "print the predicted training time and exit");
    t->add_option("--subsets", train.subsets, "subset count for --plan-only (default: enumerate)");

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "run one configuration on one instance");
    s->add_option("--config", solve.config, "configuration file")->required();
    s->add_option("--instance", solve.instance, "instance file")->required();
    s->add_option("--strategy", solve.strategy, "reinterpret a single-chain configuration as A or B");
    s->add_option("--vnd", solve.vnd, "VND list when --strategy B converts an A configuration")
        ->capture_default_str();
    solve.budget.add(s, "run budget (default 1000 ms)");
    s->add_option("--seed", solve.seed, "run seed")->capture_default_str();
    s->add_option("--out", solve.out, "result record to write");
    s->add_flag("--faithful-b", solve.faithful_b, "strategy B returns the polished best as written");

    BaselineArgs base;
    auto* b = app.add_subcommand("baseline", "best-known objectives for error percentages");
    b->add_option("--instances", base.instances, "instance directory")->required();
    base.budget.add(b, "budget per run (default 5000 ms)");
    b->add_option("--repeats", base.repeats, "runs per instance")->capture_default_str();
    b->add_option("--seed", base.seed, "master seed")->capture_default_str();
    b->add_option("--workers", base.workers, "parallel runs (0 = all cores)")->capture_default_str();
    b->add_option("--out", base.out, "baseline file to write");

    EvalArgs eval;
    auto* e = app.add_subcommand("eval", "error-versus-time curves");
    e->add_option("configs", eval.configs, "configuration files")->required();
    e->add_option("--labels", eval.labels, "comma-separated curve labels (default: file stems)");
    e->add_option("--instances", eval.instances, "instance directory")->required();
    e->add_option("--baseline", eval.baseline, "baseline table")->required();
    eval.budget.add(e, "budget per run (default 1000 ms)");
    e->add_option("--repeats", eval.repeats, "runs per instance and configuration")
        ->capture_default_str();
    e->add_option("--seed", eval.seed, "master seed")->capture_default_str();
    e->add_option("--grid-points", eval.points, "log-spaced grid points")->capture_default_str();
    e->add_option("--grid-start", eval.grid_start, "first grid time in seconds (wall-clock budgets)")
        ->capture_default_str();
    e->add_option("--workers", eval.workers, "parallel runs (0 = all cores)")->capture_default_str();
    e->add_option("--out", eval.out, "CSV file (default: stdout)");
    e->add_option("--results", eval.results_dir, "directory for per-run result records");

    ExportArgs exp;
    auto* x = app.add_subcommand("export-config", "transition table of a configuration");
    x->add_option("--config", exp.config, "configuration file")->required();
    x->add_option("--result", exp.result, "result record with observed transitions");
    x->add_option("--out", exp.out, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err) == 0 ? 0 : 2;
    }

    try {
        if (g->parsed()) return cmd_gen(gen, out);
        if (t->parsed()) return cmd_train(train, out, err);
        if (s->parsed()) return cmd_solve(solve, out);
        if (b->parsed()) return cmd_baseline(base, out);
        if (e->parsed()) return cmd_eval(eval, out, err);
        if (x->parsed()) return cmd_export(exp, out);
    } catch (const ContractViolation& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    } catch (const IoError& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace cli
