#include "cmcs/budget.hpp"
#include "cmcs/component.hpp"

namespace cmcs {

std::string_view to_string(BudgetMode mode) {
    return mode == BudgetMode::iterations ? "iterations" : "wall-clock";
}

std::string_view to_string(ComponentKind kind) {
    return kind == ComponentKind::mutation ? "mutation" : "hill-climber";
}

}  // namespace cmcs
