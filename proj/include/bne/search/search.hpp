#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bne/sampling/setting.hpp"
#include "bne/search/adaptive.hpp"
#include "bne/search/dampening.hpp"
#include "bne/search/pattern_search.hpp"
#include "bne/strategies/strategy.hpp"

namespace bne {

enum class Optimizer { Pattern, Brent };
std::string to_string(Optimizer o);
Optimizer optimizer_from_string(const std::string& s);

struct SearchConfig {
    double target_epsilon = 1e-3;
    double inner_gate = 0.8;              // inner loop hands over at inner_gate * target
    bool adaptive_grid = true;            // 1-D bidders only
    std::size_t inner_points = 40;        // per dimension for even grids, total for adaptive
    std::size_t initial_points = 10;
    double min_interval_fraction = 0.004; // of the value range
    std::size_t outer_points = 64;        // per dimension
    std::size_t search_samples = 10000;
    std::size_t outer_samples = 20000;
    PatternSearchConfig pattern{3, 0.1, 12};
    Optimizer optimizer = Optimizer::Pattern;
    DampeningConfig dampening;
    bool common_random_numbers = true;
    bool outer_loop = true;
    std::uint64_t seed = 1;
    std::size_t max_iterations = 100;     // inner iterations in total
    std::size_t resume_iterations = 2;    // inner iterations forced after a failed outer pass
    std::size_t workers = 1;
};

struct IterationRecord {
    std::size_t iteration = 0;
    std::string phase;     // "inner" or "outer"
    int bidder = 0;
    double epsilon = 0.0;  // max loss over this bidder's control points
    double seconds = 0.0;  // wall time since the search started
    std::size_t points = 0;
};

struct SearchOutcome {
    Profile profile;
    double epsilon_estimate = 0.0;
    bool converged = false;
    std::size_t inner_iterations = 0;
    std::size_t outer_iterations = 0;
    std::vector<IterationRecord> trace;
};

// Best response at one valuation: optimizer started at the current bid, utilities from the
// bidder's estimator on a stream identified by `key`.
BestResponse pointwise_best_response(const Setting& s, const Profile& profile, int bidder, const Valuation& v,
                                     std::uint64_t key, std::size_t samples, const PatternSearchConfig& pattern,
                                     Optimizer optimizer, bool common_random_numbers);

// Stream key of a control point: (seed, phase, iteration, bidder, coordinates).
std::uint64_t control_point_key(std::uint64_t seed, std::uint64_t phase, std::size_t iteration, int bidder,
                                const Valuation& v);

struct IterationResult {
    Profile updated;
    double epsilon = 0.0;
    std::vector<IterationRecord> records;
};

// One simultaneous best-response iteration over all updating bidders.
IterationResult search_iteration(const Setting& s, const Profile& current, const SearchConfig& cfg,
                                 std::size_t iteration, bool outer);

SearchOutcome run_search(const Setting& s, const Profile& start, const SearchConfig& cfg,
                         const std::function<void(const IterationRecord&)>& on_record = {});

}  // namespace bne
