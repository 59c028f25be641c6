#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "cmcs/errors.hpp"

namespace cmcs {

enum class BudgetMode { wall_clock, iterations };

std::string_view to_string(BudgetMode mode);

// Run budget: milliseconds of wall-clock time, or a count of component
// applications (clock-free, used for reproducible runs).
struct Budget {
    BudgetMode mode = BudgetMode::wall_clock;
    std::int64_t limit = 1000;

    static Budget millis(std::int64_t ms) { return {BudgetMode::wall_clock, ms}; }
    static Budget iterations(std::int64_t count) { return {BudgetMode::iterations, count}; }

    friend bool operator==(const Budget&, const Budget&) = default;
};

// Tracks consumption of a Budget in "ticks": component applications in
// iteration mode, microseconds in wall-clock mode. A deadline below the
// budget's limit lets consecutive phases share one clock, so trace stamps
// stay on a single time axis.
class BudgetClock {
public:
    using Clock = std::chrono::steady_clock;

    explicit BudgetClock(Budget budget)
        : budget_(budget), start_(Clock::now()), deadline_(total_ticks()) {
        require(budget.limit > 0, "budget limit must be positive");
    }

    const Budget& budget() const { return budget_; }

    std::int64_t total_ticks() const {
        return budget_.mode == BudgetMode::iterations ? budget_.limit : budget_.limit * 1000;
    }

    std::int64_t now_ticks() const {
        if (budget_.mode == BudgetMode::iterations) return applications_;
        return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_).count();
    }

    // Trace timestamp: application count or elapsed microseconds.
    std::int64_t stamp() const { return now_ticks(); }

    bool expired() const { return now_ticks() >= deadline_; }

    // True once at least `fraction` of the whole budget has been consumed.
    bool reached(double fraction) const {
        return static_cast<double>(now_ticks()) >= fraction * static_cast<double>(total_ticks());
    }

    // Restricts the clock to the first `fraction` of the budget (rounded to
    // the nearest tick). Pass 1.0 to lift the restriction.
    void limit_to(double fraction) {
        deadline_ = std::llround(fraction * static_cast<double>(total_ticks()));
    }

    void tick() { ++applications_; }
    std::int64_t applications() const { return applications_; }

private:
    Budget budget_;
    Clock::time_point start_;
    std::int64_t deadline_;
    std::int64_t applications_ = 0;
};

}  // namespace cmcs
