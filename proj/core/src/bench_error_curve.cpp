#include "bench/error_curve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "bench/baseline.hpp"
#include "cmcs/errors.hpp"

namespace bench {

std::vector<double> log_grid(double first, double last, std::size_t points) {
    cmcs::require(first > 0 && last >= first, "log grid needs 0 < first <= last");
    cmcs::require(points >= 1, "log grid needs at least one point");
    if (points == 1) return {last};
    std::vector<double> grid(points);
    const double ratio = std::log(last / first);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = first * std::exp(ratio * static_cast<double>(i) / static_cast<double>(points - 1));
    grid.front() = first;
    grid.back() = last;
    return grid;
}

cmcs::Objective best_at(const std::vector<cmcs::TracePoint>& trace, std::int64_t stamp) {
    cmcs::require(!trace.empty(), "empty trace");
    const auto it = std::upper_bound(trace.begin(), trace.end(), stamp,
                                     [](std::int64_t s, const cmcs::TracePoint& p) { return s < p.stamp; });
    return it == trace.begin() ? trace.front().objective : std::prev(it)->objective;
}

ErrorCurve::ErrorCurve(std::string label, std::vector<double> grid, double ticks_per_unit)
    : label_(std::move(label)), grid_(std::move(grid)), ticks_per_unit_(ticks_per_unit),
      sums_(grid_.size(), 0.0) {}

void ErrorCurve::add_run(const std::vector<cmcs::TracePoint>& trace, cmcs::Objective reference) {
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const auto stamp = static_cast<std::int64_t>(std::floor(grid_[i] * ticks_per_unit_));
        sums_[i] += error_percent(best_at(trace, stamp), reference);
    }
    ++runs_;
}

std::vector<double> ErrorCurve::mean_errors() const {
    std::vector<double> out(sums_.size(), 0.0);
    if (runs_ == 0) return out;
    for (std::size_t i = 0; i < sums_.size(); ++i) out[i] = sums_[i] / static_cast<double>(runs_);
    return out;
}

double ErrorCurve::final_error() const {
    const auto m = mean_errors();
    return m.empty() ? 0.0 : m.back();
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string curves_to_csv(const std::string& time_column, const std::vector<ErrorCurve>& curves) {
    std::string out = time_column;
    for (const auto& c : curves) out += ',' + c.label();
    out += '\n';
    if (curves.empty()) return out;
    const auto& grid = curves.front().grid();
    std::vector<std::vector<double>> means;
    for (const auto& c : curves) {
        cmcs::require(c.grid() == grid, "all curves must share one time grid");
        means.push_back(c.mean_errors());
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += format_double(grid[i]);
        for (const auto& m : means) out += ',' + format_double(m[i]);
        out += '\n';
    }
    return out;
}

}  // namespace bench
