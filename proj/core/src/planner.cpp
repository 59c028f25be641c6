#include "cmcs/planner.hpp"

#include <cmath>
#include <sstream>

#include "cmcs/errors.hpp"

namespace cmcs {

std::size_t component_sets(Strategy strategy, std::size_t subsets, bool distinct_pairs) {
    if (strategy != Strategy::C) return subsets;
    return distinct_pairs ? subsets * (subsets == 0 ? 0 : subsets - 1) : subsets * subsets;
}

TrainingPlan plan_training(Strategy strategy, std::size_t components, std::size_t sets,
                           double search_minutes) {
    require(search_minutes > 0, "search budget must be positive");
    TrainingPlan plan;
    plan.strategy = strategy;
    plan.components = components;
    plan.component_sets = sets;
    plan.minutes_per_set =
        strategy == Strategy::C ? kStrategyCStages * search_minutes : search_minutes;
    plan.total_minutes = static_cast<double>(sets) * plan.minutes_per_set;
    return plan;
}

std::string format_plan_row(const TrainingPlan& plan) {
    std::ostringstream os;
    os << to_string(plan.strategy) << ',' << plan.components << ',' << plan.component_sets << ',';
    if (plan.total_minutes == std::floor(plan.total_minutes))
        os << static_cast<long long>(plan.total_minutes);
    else
        os << plan.total_minutes;
    return os.str();
}

}  // namespace cmcs
