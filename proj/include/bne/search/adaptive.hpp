#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bne/core/vec.hpp"

namespace bne {

struct PointResult {
    Bid bid;
    double loss = 0.0;
};

struct AdaptiveConfig {
    std::size_t initial_points = 10;
    std::size_t max_points = 40;
    double min_interval = 0.004;
};

struct AdaptiveResult {
    std::vector<double> points;        // sorted
    std::vector<PointResult> results;  // aligned with points
};

// Absolute change of slope at v (max over bid components); 0 when a neighbor is missing or
// either adjacent interval is at most min_interval.
double curvature_priority(std::optional<std::pair<double, Bid>> lower, double v, const Bid& b,
                          std::optional<std::pair<double, Bid>> upper, double min_interval);

// Evaluates `br` on `initial_points` even points of [lo, hi], then repeatedly inserts the
// midpoint between the highest-priority point and its farther neighbor until max_points exist.
// `br(v, ordinal)` receives the insertion ordinal of the point.
AdaptiveResult adaptive_best_response(double lo, double hi, const std::function<PointResult(double, std::size_t)>& br,
                                      const AdaptiveConfig& cfg, std::size_t workers = 1);

}  // namespace bne
