#pragma once

#include <cstddef>
#include <string>

#include "cmcs/config.hpp"

namespace cmcs {

// Predicted configurator wall time. A and B run one matrix search per
// component set; C runs three stages per ordered pair of subsets.
struct TrainingPlan {
    Strategy strategy = Strategy::A;
    std::size_t components = 0;      // |H|
    std::size_t component_sets = 0;  // subsets (A, B) or subset pairs (C)
    double minutes_per_set = 0;
    double total_minutes = 0;
};

inline constexpr double kDefaultSearchMinutes = 4.0;  // per subset, A and B
inline constexpr double kDefaultStageMinutes = 2.0;   // per stage, C
inline constexpr std::size_t kStrategyCStages = 3;

// Number of component sets searched for `subsets` meaningful subsets.
std::size_t component_sets(Strategy strategy, std::size_t subsets, bool distinct_pairs);

// `search_minutes` is the per-subset budget for A/B and the per-stage
// budget for C.
TrainingPlan plan_training(Strategy strategy, std::size_t components, std::size_t component_sets,
                           double search_minutes);

// CSV row "strategy,components,sets,minutes".
std::string format_plan_row(const TrainingPlan& plan);

}  // namespace cmcs
