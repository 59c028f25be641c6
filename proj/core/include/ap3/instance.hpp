#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ap3 {

using Cost = std::int64_t;

// Generator family. SquareRootExact keeps sqrt costs at 1e-6 resolution
// (scaled by kExactScale) instead of rounding them to integers.
enum class Family { random, clique, square_root, square_root_exact, external };

inline constexpr Cost kExactScale = 1'000'000;

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

// n x n x n cost tensor, immutable once built. Indices are 0-based.
class Instance {
public:
    Instance(int n, std::vector<Cost> costs, Family family = Family::external,
             std::uint64_t seed = 0, std::string name = {});

    int size() const { return n_; }
    Cost cost(int i, int j, int k) const {
        return costs_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    std::span<const Cost> costs() const { return costs_; }

    Family family() const { return family_; }
    std::uint64_t seed() const { return seed_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    int n_;
    std::vector<Cost> costs_;
    Family family_;
    std::uint64_t seed_;
    std::string name_;
};

// Deterministic in (family, n, seed). Edge weights and random costs are
// uniform on {1, ..., 100}.
Instance generate_instance(Family family, int n, std::uint64_t seed, std::string name = {});

}  // namespace ap3
