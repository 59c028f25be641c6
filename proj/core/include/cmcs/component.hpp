#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmcs/errors.hpp"
#include "cmcs/rng.hpp"

namespace cmcs {

using Objective = std::int64_t;

enum class ComponentKind { mutation, hill_climber };

std::string_view to_string(ComponentKind kind);

// A problem domain plugs into the engine by naming its instance and
// solution types and providing an objective and a feasibility predicate.
template <class D>
concept Domain = requires(const typename D::Instance& inst, const typename D::Solution& s) {
    { D::objective(inst, s) } -> std::convertible_to<Objective>;
    { D::is_feasible(inst, s) } -> std::convertible_to<bool>;
};

template <Domain D>
struct Component {
    using Apply = std::function<void(const typename D::Instance&, typename D::Solution&, Rng&)>;

    std::string name;
    ComponentKind kind = ComponentKind::mutation;
    Apply apply;
};

// Ordered, name-addressable collection of components.
template <Domain D>
class ComponentPool {
public:
    ComponentPool() = default;
    explicit ComponentPool(std::vector<Component<D>> components) {
        for (auto& c : components) add(std::move(c));
    }

    void add(Component<D> component) {
        require(find(component.name) == nullptr, "duplicate component name '" + component.name + "'");
        components_.push_back(std::move(component));
    }

    const Component<D>* find(std::string_view name) const {
        for (const auto& c : components_)
            if (c.name == name) return &c;
        return nullptr;
    }

    const Component<D>& get(std::string_view name) const {
        const auto* c = find(name);
        require(c != nullptr, "unknown component '" + std::string(name) + "'");
        return *c;
    }

    std::vector<const Component<D>*> resolve(const std::vector<std::string>& names) const {
        std::vector<const Component<D>*> out;
        out.reserve(names.size());
        for (const auto& n : names) out.push_back(&get(n));
        return out;
    }

    // Sub-pool in the order given by `names`.
    ComponentPool subset(const std::vector<std::string>& names) const {
        ComponentPool out;
        for (const auto& n : names) out.add(get(n));
        return out;
    }

    std::span<const Component<D>> components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& c : components_) out.push_back(c.name);
        return out;
    }

    std::vector<ComponentKind> kinds() const {
        std::vector<ComponentKind> out;
        for (const auto& c : components_) out.push_back(c.kind);
        return out;
    }

private:
    std::vector<Component<D>> components_;
};

}  // namespace cmcs
