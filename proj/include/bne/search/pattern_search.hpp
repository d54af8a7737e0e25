#pragma once

#include <functional>

#include "bne/core/vec.hpp"
#include "bne/sampling/estimator.hpp"

namespace bne {

using Objective = std::function<UtilityEstimate(const Bid&)>;

struct PatternSearchConfig {
    std::size_t points_per_dim = 3;  // odd; 3 gives the 3^r box around the incumbent
    double initial_spacing = 0.1;
    int budget = 12;
};

struct BestResponse {
    Bid bid;
    UtilityEstimate best;   // utility of `bid`
    UtilityEstimate start;  // utility of the starting bid
    int evaluations = 0;
    double final_spacing = 0.0;

    double loss() const { return best.utility - start.utility; }
};

// Budgeted pattern search: moving to a strictly better pattern point costs 2, halving the
// spacing costs 1. Bids are clamped to [0, ceiling] componentwise.
BestResponse pattern_search(const Objective& f, const Bid& start, const PatternSearchConfig& cfg, double ceiling);

// Brent maximization over [0, ceiling] for single-atom bids; never returns worse than `start`.
BestResponse brent_search(const Objective& f, const Bid& start, double ceiling, int bits = 26);

}  // namespace bne
