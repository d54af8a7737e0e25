#include "bne/search/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bne/util/parallel.hpp"

namespace bne {

double curvature_priority(std::optional<std::pair<double, Bid>> lower, double v, const Bid& b,
                          std::optional<std::pair<double, Bid>> upper, double min_interval) {
    if (!lower || !upper) return 0.0;
    const double dl = v - lower->first;
    const double du = upper->first - v;
    if (dl <= min_interval || du <= min_interval) return 0.0;
    double p = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const double s_lo = (b[k] - lower->second[k]) / dl;
        const double s_hi = (upper->second[k] - b[k]) / du;
        p = std::max(p, std::abs(s_hi - s_lo));
    }
    // Slope changes at rounding level count as none, so collinear points tie exactly.
    return p < 1e-9 ? 0.0 : p;
}

namespace {

double max_diff(const Bid& a, const Bid& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

AdaptiveResult adaptive_best_response(double lo, double hi, const std::function<PointResult(double, std::size_t)>& br,
                                      const AdaptiveConfig& cfg, std::size_t workers) {
    if (cfg.initial_points < 2 || cfg.max_points < cfg.initial_points)
        throw std::invalid_argument("adaptive control points: need 2 <= initial <= max");
    if (!(hi > lo)) throw std::invalid_argument("adaptive control points: empty interval");
    const std::size_t n0 = cfg.initial_points;
    AdaptiveResult r;
    r.points.resize(n0);
    for (std::size_t k = 0; k < n0; ++k)
        r.points[k] = k + 1 == n0 ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n0 - 1);
    r.results.resize(n0);
    parallel_for(n0, workers, [&](std::size_t k) { r.results[k] = br(r.points[k], k); });

    auto priority = [&](std::size_t k) {
        std::optional<std::pair<double, Bid>> lower, upper;
        if (k > 0) lower = std::make_pair(r.points[k - 1], r.results[k - 1].bid);
        if (k + 1 < r.points.size()) upper = std::make_pair(r.points[k + 1], r.results[k + 1].bid);
        return curvature_priority(lower, r.points[k], r.results[k].bid, upper, cfg.min_interval);
    };
    auto widest_side = [&](std::size_t k) {
        double w = 0.0;
        if (k > 0) w = std::max(w, r.points[k] - r.points[k - 1]);
        if (k + 1 < r.points.size()) w = std::max(w, r.points[k + 1] - r.points[k]);
        return w;
    };
    std::vector<double> prio(n0);
    for (std::size_t k = 0; k < n0; ++k) prio[k] = priority(k);

    for (std::size_t ordinal = n0; ordinal < cfg.max_points; ++ordinal) {
        // Highest priority; ties prefer the point with the wider adjacent interval, then the lower point.
        std::size_t best = 0;
        for (std::size_t k = 1; k < r.points.size(); ++k) {
            if (prio[k] > prio[best] || (prio[k] == prio[best] && widest_side(k) > widest_side(best))) best = k;
        }
        // Farther neighbor; ties prefer the steeper best-response difference, then the lower side.
        std::size_t nb;
        if (best == 0) {
            nb = 1;
        } else if (best + 1 == r.points.size()) {
            nb = best - 1;
        } else {
            const double dl = r.points[best] - r.points[best - 1];
            const double du = r.points[best + 1] - r.points[best];
            if (du > dl) {
                nb = best + 1;
            } else if (dl > du) {
                nb = best - 1;
            } else {
                nb = max_diff(r.results[best + 1].bid, r.results[best].bid) >
                             max_diff(r.results[best - 1].bid, r.results[best].bid)
                         ? best + 1
                         : best - 1;
            }
        }
        const std::size_t left = std::min(best, nb);
        const double v = 0.5 * (r.points[left] + r.points[left + 1]);
        PointResult res = br(v, ordinal);
        r.points.insert(r.points.begin() + static_cast<std::ptrdiff_t>(left + 1), v);
        r.results.insert(r.results.begin() + static_cast<std::ptrdiff_t>(left + 1), res);
        prio.insert(prio.begin() + static_cast<std::ptrdiff_t>(left + 1), 0.0);
        for (std::size_t k = left; k <= left + 2 && k < r.points.size(); ++k) prio[k] = priority(k);
    }
    return r;
}

}  // namespace bne
