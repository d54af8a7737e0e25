#include "bne/search/search.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "bne/util/hash.hpp"
#include "bne/util/parallel.hpp"

namespace bne {

std::string to_string(Optimizer o) { return o == Optimizer::Pattern ? "pattern" : "brent"; }

Optimizer optimizer_from_string(const std::string& s) {
    if (s == "pattern") return Optimizer::Pattern;
    if (s == "brent") return Optimizer::Brent;
    throw std::invalid_argument("unknown optimizer '" + s + "'");
}

std::uint64_t control_point_key(std::uint64_t seed, std::uint64_t phase, std::size_t iteration, int bidder,
                                const Valuation& v) {
    std::uint64_t k = derive_key({seed, phase, iteration, static_cast<std::uint64_t>(bidder)});
    for (double x : v) k = derive_key({k, double_bits(x)});
    return k;
}

BestResponse pointwise_best_response(const Setting& s, const Profile& profile, int bidder, const Valuation& v,
                                     std::uint64_t key, std::size_t samples, const PatternSearchConfig& pattern,
                                     Optimizer optimizer, bool crn) {
    const UtilityEstimator& est = s.estimator(bidder);
    const Bid start = profile.bid(static_cast<std::size_t>(bidder), v);
    const double ceiling = s.bid_ceiling.at(static_cast<std::size_t>(bidder));
    Objective f;
    std::shared_ptr<const SampleSet> set;
    std::uint64_t counter = 0;
    if (crn) {
        set = est.sample(profile, bidder, v, key, samples);
        f = [&](const Bid& b) { return set->evaluate(v, b); };
    } else {
        // Every evaluation draws a fresh stream.
        f = [&](const Bid& b) {
            return est.sample(profile, bidder, v, derive_key({key, ++counter}), samples)->evaluate(v, b);
        };
    }
    if (optimizer == Optimizer::Brent && start.size() == 1) return brent_search(f, start, ceiling);
    return pattern_search(f, start, pattern, ceiling);
}

namespace {

constexpr std::uint64_t kInnerPhase = 1;
constexpr std::uint64_t kOuterPhase = 2;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

IterationResult search_iteration(const Setting& s, const Profile& current, const SearchConfig& cfg,
                                 std::size_t iteration, bool outer) {
    IterationResult out;
    out.updated = current;
    const std::uint64_t phase = outer ? kOuterPhase : kInnerPhase;
    const std::size_t samples = outer ? cfg.outer_samples : cfg.search_samples;
    for (int i : s.domain.update_representatives()) {
        const BidderSpec& spec = s.domain.bidder(static_cast<std::size_t>(i));
        auto br = [&](const Valuation& v) {
            BestResponse r = pointwise_best_response(s, current, i, v, control_point_key(cfg.seed, phase, iteration, i, v),
                                                     samples, cfg.pattern, cfg.optimizer, cfg.common_random_numbers);
            return PointResult{r.bid, r.loss()};
        };
        ControlGrid grid;
        std::vector<PointResult> results;
        if (!outer && cfg.adaptive_grid && spec.value_dim() == 1) {
            AdaptiveConfig ac{cfg.initial_points, cfg.inner_points,
                              cfg.min_interval_fraction * (spec.value_hi[0] - spec.value_lo[0])};
            AdaptiveResult ar = adaptive_best_response(
                spec.value_lo[0], spec.value_hi[0], [&](double v, std::size_t) { return br(Valuation{v}); }, ac,
                cfg.workers);
            grid = ControlGrid({ar.points});
            results = std::move(ar.results);
        } else {
            grid = ControlGrid::even_box(spec, outer ? cfg.outer_points : cfg.inner_points);
            results.resize(grid.points());
            parallel_for(grid.points(), cfg.workers, [&](std::size_t p) { results[p] = br(grid.point(p)); });
        }
        std::vector<Bid> bids;
        std::vector<double> losses;
        double eps = 0.0;
        for (const auto& r : results) {
            bids.push_back(r.bid);
            losses.push_back(r.loss);
            eps = std::max(eps, r.loss);
        }
        auto next = std::make_shared<const InterpolatedStrategy>(
            update_strategy(current.strategy(static_cast<std::size_t>(i)), grid, bids, losses, cfg.dampening));
        out.updated.assign(s.domain, i, next);
        out.epsilon = std::max(out.epsilon, eps);
        out.records.push_back({iteration, outer ? "outer" : "inner", i, eps, 0.0, grid.points()});
    }
    return out;
}

SearchOutcome run_search(const Setting& s, const Profile& start, const SearchConfig& cfg,
                         const std::function<void(const IterationRecord&)>& on_record) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out;
    Profile current = start;
    Profile best_profile = start;
    double best_eps = std::numeric_limits<double>::infinity();
    std::size_t since_outer = 0;
    bool after_failed_outer = false;

    auto log = [&](std::vector<IterationRecord>& recs) {
        for (auto& r : recs) {
            r.seconds = seconds_since(t0);
            out.trace.push_back(r);
            if (on_record) on_record(r);
        }
    };

    if (s.domain.update_representatives().empty()) {
        out.profile = start;
        out.converged = true;
        return out;
    }

    while (out.inner_iterations < cfg.max_iterations) {
        IterationResult it = search_iteration(s, current, cfg, out.inner_iterations, false);
        ++out.inner_iterations;
        ++since_outer;
        log(it.records);
        if (it.epsilon < best_eps) {
            best_eps = it.epsilon;
            best_profile = current;
        }
        current = it.updated;
        const bool gate = it.epsilon <= cfg.inner_gate * cfg.target_epsilon;
        if (!gate || (after_failed_outer && since_outer < cfg.resume_iterations)) continue;
        if (!cfg.outer_loop) {
            out.profile = current;
            out.epsilon_estimate = it.epsilon;
            out.converged = true;
            return out;
        }
        IterationResult o = search_iteration(s, current, cfg, out.outer_iterations, true);
        ++out.outer_iterations;
        log(o.records);
        if (o.epsilon < best_eps) {
            best_eps = o.epsilon;
            best_profile = current;
        }
        current = o.updated;
        if (o.epsilon <= cfg.target_epsilon) {
            out.profile = current;
            out.epsilon_estimate = o.epsilon;
            out.converged = true;
            return out;
        }
        after_failed_outer = true;
        since_outer = 0;
    }
    out.profile = best_profile;
    out.epsilon_estimate = best_eps;
    out.converged = false;
    return out;
}

}  // namespace bne
