#include "bne/search/pattern_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace bne {

BestResponse pattern_search(const Objective& f, const Bid& start, const PatternSearchConfig& cfg, double ceiling) {
    if (cfg.points_per_dim < 3 || cfg.points_per_dim % 2 == 0)
        throw std::invalid_argument("pattern search needs an odd number (>= 3) of points per dimension");
    if (!(cfg.initial_spacing > 0.0)) throw std::invalid_argument("pattern spacing must be positive");
    const std::size_t r = start.size();
    const int half = static_cast<int>(cfg.points_per_dim / 2);
    std::size_t pattern = 1;
    for (std::size_t d = 0; d < r; ++d) pattern *= cfg.points_per_dim;

    BestResponse out;
    Bid center = start;
    for (double& x : center) x = std::clamp(x, 0.0, ceiling);
    out.start = f(center);
    out.best = out.start;
    out.evaluations = 1;
    double spacing = cfg.initial_spacing;
    int budget = cfg.budget;
    std::vector<int> offset(r);
    while (budget > 0) {
        Bid best_bid = center;
        UtilityEstimate best = out.best;
        bool improved = false;
        for (std::size_t p = 0; p < pattern; ++p) {
            std::size_t q = p;
            for (std::size_t d = r; d-- > 0;) {
                offset[d] = static_cast<int>(q % cfg.points_per_dim) - half;
                q /= cfg.points_per_dim;
            }
            Bid cand = center;
            for (std::size_t d = 0; d < r; ++d) cand[d] = std::clamp(center[d] + offset[d] * spacing, 0.0, ceiling);
            if (cand == center) continue;
            UtilityEstimate e = f(cand);
            ++out.evaluations;
            if (e.utility > best.utility) {
                best = e;
                best_bid = cand;
                improved = true;
            }
        }
        if (improved) {
            center = best_bid;
            out.best = best;
            budget -= 2;
        } else {
            spacing *= 0.5;
            budget -= 1;
        }
    }
    out.bid = center;
    out.final_spacing = spacing;
    return out;
}

BestResponse brent_search(const Objective& f, const Bid& start, double ceiling, int bits) {
    if (start.size() != 1) throw std::invalid_argument("Brent search handles single-atom bids only");
    BestResponse out;
    Bid s{std::clamp(start[0], 0.0, ceiling)};
    out.start = f(s);
    out.evaluations = 1;
    auto neg = [&](double b) {
        ++out.evaluations;
        return -f(Bid{b}).utility;
    };
    std::uintmax_t iters = 200;
    auto [b, v] = boost::math::tools::brent_find_minima(neg, 0.0, ceiling, bits, iters);
    (void)v;
    Bid cand{b};
    UtilityEstimate e = f(cand);
    ++out.evaluations;
    if (e.utility > out.start.utility) {
        out.bid = cand;
        out.best = e;
    } else {
        out.bid = s;
        out.best = out.start;
    }
    out.final_spacing = 0.0;
    return out;
}

}  // namespace bne
