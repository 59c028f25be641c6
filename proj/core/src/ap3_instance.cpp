#include "ap3/instance.hpp"

#include <cmath>

#include "cmcs/errors.hpp"
#include "cmcs/rng.hpp"

namespace ap3 {

using cmcs::require;

std::string_view to_string(Family family) {
    switch (family) {
    case Family::random:
        return "random";
    case Family::clique:
        return "clique";
    case Family::square_root:
        return "sqrt";
    case Family::square_root_exact:
        return "sqrt-exact";
    case Family::external:
        return "external";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "random") return Family::random;
    if (text == "clique") return Family::clique;
    if (text == "sqrt" || text == "square-root") return Family::square_root;
    if (text == "sqrt-exact") return Family::square_root_exact;
    if (text == "external") return Family::external;
    throw cmcs::ContractViolation("unknown instance family '" + std::string(text) + "'");
}

Instance::Instance(int n, std::vector<Cost> costs, Family family, std::uint64_t seed,
                   std::string name)
    : n_(n), costs_(std::move(costs)), family_(family), seed_(seed), name_(std::move(name)) {
    require(n >= 1, "instance size must be at least 1");
    require(costs_.size() == static_cast<std::size_t>(n) * n * n, "cost tensor must hold n^3 entries");
}

namespace {

Cost draw_weight(cmcs::Rng& rng) { return 1 + static_cast<Cost>(cmcs::uniform_index(rng, 100)); }

std::vector<Cost> draw_edges(int n, cmcs::Rng& rng) {
    std::vector<Cost> w(static_cast<std::size_t>(n) * n);
    for (auto& x : w) x = draw_weight(rng);
    return w;
}

}  // namespace

Instance generate_instance(Family family, int n, std::uint64_t seed, std::string name) {
    require(n >= 1, "instance size must be at least 1");
    require(family != Family::external, "external instances cannot be generated");
    cmcs::Rng rng(seed);
    const auto un = static_cast<std::size_t>(n);
    std::vector<Cost> costs(un * un * un);

    if (family == Family::random) {
        for (auto& c : costs) c = draw_weight(rng);
        return Instance(n, std::move(costs), family, seed, std::move(name));
    }

    // Complete tripartite graph I-J-K with independent edge weights.
    const auto ij = draw_edges(n, rng);
    const auto jk = draw_edges(n, rng);
    const auto ik = draw_edges(n, rng);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            for (std::size_t k = 0; k < un; ++k) {
                const Cost a = ij[i * un + j];
                const Cost b = jk[j * un + k];
                const Cost c = ik[i * un + k];
                Cost& out = costs[(i * un + j) * un + k];
                switch (family) {
                case Family::clique:
                    out = a + b + c;
                    break;
                case Family::square_root:
                    out = std::llround(std::sqrt(static_cast<double>(a * a + b * b + c * c)));
                    break;
                case Family::square_root_exact:
                    out = std::llround(static_cast<double>(kExactScale) *
                                       std::sqrt(static_cast<double>(a * a + b * b + c * c)));
                    break;
                default:
                    break;
                }
            }
        }
    }
    return Instance(n, std::move(costs), family, seed, std::move(name));
}

}  // namespace ap3
