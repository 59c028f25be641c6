#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cmcs/component.hpp"
#include "cmcs/run_result.hpp"

namespace bench {

// `points` log-spaced values from `first` to `last` inclusive.
std::vector<double> log_grid(double first, double last, std::size_t points);

// Best objective recorded at or before `stamp` (trace[0] is the start).
cmcs::Objective best_at(const std::vector<cmcs::TracePoint>& trace, std::int64_t stamp);

// Mean solution error over a set of runs, sampled on a shared grid.
class ErrorCurve {
public:
    // `ticks_per_unit` converts grid values to trace stamps: 1e6 when the
    // grid is in seconds and stamps are microseconds, 1 for applications.
    ErrorCurve(std::string label, std::vector<double> grid, double ticks_per_unit);

    void add_run(const std::vector<cmcs::TracePoint>& trace, cmcs::Objective reference);

    const std::string& label() const { return label_; }
    const std::vector<double>& grid() const { return grid_; }
    std::size_t runs() const { return runs_; }
    std::vector<double> mean_errors() const;
    double final_error() const;

private:
    std::string label_;
    std::vector<double> grid_;
    double ticks_per_unit_;
    std::vector<double> sums_;
    std::size_t runs_ = 0;
};

// CSV: header "<time_column>,<label>,...", then one row per grid point.
// Numbers use the shortest round-trip decimal form with '.' separators.
std::string curves_to_csv(const std::string& time_column, const std::vector<ErrorCurve>& curves);

std::string format_double(double value);

}  // namespace bench
