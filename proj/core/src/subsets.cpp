#include "cmcs/subsets.hpp"

#include <algorithm>

#include "cmcs/errors.hpp"

namespace cmcs {

bool is_meaningful(std::span<const ComponentKind> kinds) {
    const bool has_mutation = std::ranges::find(kinds, ComponentKind::mutation) != kinds.end();
    const bool has_climber = std::ranges::find(kinds, ComponentKind::hill_climber) != kinds.end();
    return has_mutation && has_climber;
}

std::vector<Subset> enumerate_meaningful_subsets(std::span<const ComponentKind> pool_kinds,
                                                 std::size_t size) {
    const std::size_t n = pool_kinds.size();
    require(size >= 2 && size <= n, "subset size must lie in [2, pool size]");
    std::vector<Subset> out;
    Subset idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::vector<ComponentKind> kinds(size);
    for (;;) {
        for (std::size_t i = 0; i < size; ++i) kinds[i] = pool_kinds[idx[i]];
        if (is_meaningful(kinds)) out.push_back(idx);
        // next combination in lexicographic order
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> subset_pairs(std::size_t count, bool distinct) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (!distinct || a != b) out.emplace_back(a, b);
    return out;
}

}  // namespace cmcs
