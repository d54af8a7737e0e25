#include "bne/verification/verification.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "bne/util/hash.hpp"
#include "bne/util/parallel.hpp"

namespace bne {

std::string to_string(VerificationMethod m) {
    switch (m) {
        case VerificationMethod::Auto: return "auto";
        case VerificationMethod::TheoremBound: return "theorem_bound";
        case VerificationMethod::GridEstimate: return "grid_estimate";
    }
    return "?";
}

VerificationMethod verification_method_from_string(const std::string& s) {
    for (auto m : {VerificationMethod::Auto, VerificationMethod::TheoremBound, VerificationMethod::GridEstimate})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown verification method '" + s + "'");
}

std::string to_string(StreamPolicy p) { return p == StreamPolicy::Shared ? "shared" : "per_point"; }

StreamPolicy stream_policy_from_string(const std::string& s) {
    if (s == "shared") return StreamPolicy::Shared;
    if (s == "per_point") return StreamPolicy::PerPoint;
    throw std::invalid_argument("unknown verification stream policy '" + s + "'");
}

namespace {

constexpr std::uint64_t kVerificationTag = 0x5645524946ull;

std::vector<int> verified_bidders(const Setting& s, const VerificationConfig& cfg) {
    std::vector<int> b = cfg.bidders.empty() ? s.domain.verification_bidders : cfg.bidders;
    for (int i : b)
        if (s.domain.bidder(static_cast<std::size_t>(i)).role == Role::FixedTruthful)
            throw std::invalid_argument("cannot verify a fixed-truthful bidder");
    return b;
}

std::map<std::string, std::string> parameters(const Setting& s, const VerificationConfig& cfg,
                                              const std::vector<int>& bidders) {
    std::map<std::string, std::string> p;
    p["grid_points_per_dim"] = std::to_string(cfg.grid_points);
    p["samples"] = std::to_string(cfg.samples);
    p["pattern_budget"] = std::to_string(cfg.pattern.budget);
    p["pattern_initial_spacing"] = std::to_string(cfg.pattern.initial_spacing);
    p["pattern_points_per_dim"] = std::to_string(cfg.pattern.points_per_dim);
    p["optimizer"] = to_string(cfg.optimizer);
    p["seed"] = std::to_string(cfg.seed);
    p["streams"] = to_string(cfg.streams);
    std::string ids, est;
    for (int i : bidders) {
        ids += (ids.empty() ? "" : ",") + s.domain.bidder(static_cast<std::size_t>(i)).name;
        est += (est.empty() ? "" : ",") + s.estimator(i).name();
    }
    p["bidders"] = ids;
    p["estimators"] = est;
    return p;
}

}  // namespace

std::vector<VertexResult> evaluate_vertices(const Setting& s, const Profile& profile, int bidder,
                                            const ControlGrid& grid, const VerificationConfig& cfg) {
    const UtilityEstimator& est = s.estimator(bidder);
    const double ceiling = s.bid_ceiling.at(static_cast<std::size_t>(bidder));
    const std::uint64_t base = derive_key({cfg.seed, kVerificationTag, static_cast<std::uint64_t>(bidder)});
    const bool shared = cfg.streams == StreamPolicy::Shared;
    std::shared_ptr<const SampleSet> common;
    if (shared && est.own_value_independent()) common = est.sample(profile, bidder, grid.point(0), base, cfg.samples);

    std::vector<VertexResult> out(grid.points());
    parallel_for(grid.points(), cfg.workers, [&](std::size_t p) {
        VertexResult& r = out[p];
        r.value = grid.point(p);
        r.played = profile.bid(static_cast<std::size_t>(bidder), r.value);
        std::shared_ptr<const SampleSet> set = common;
        if (!set) {
            std::uint64_t key = base;
            if (!shared)
                for (double x : r.value) key = derive_key({key, double_bits(x)});
            set = est.sample(profile, bidder, r.value, key, cfg.samples);
        }
        Objective f = [&](const Bid& b) { return set->evaluate(r.value, b); };
        BestResponse br = cfg.optimizer == Optimizer::Brent && r.played.size() == 1
                              ? brent_search(f, r.played, ceiling)
                              : pattern_search(f, r.played, cfg.pattern, ceiling);
        r.best_bid = br.bid;
        r.best_utility = br.best.utility;
        r.start = br.start;
    });
    return out;
}

WorstTerm bound_from_vertices(const BidderSpec& spec, const ControlGrid& grid, const std::vector<VertexResult>& vr) {
    if (vr.size() != grid.points()) throw std::invalid_argument("bound: vertex table does not match grid");
    WorstTerm w;
    w.loss = -std::numeric_limits<double>::infinity();
    const std::size_t dims = grid.dims();
    std::array<std::size_t, kMaxAtoms> idx{}, up{};
    for (std::size_t g = 0; g < grid.points(); ++g) {
        grid.unflatten(g, {idx.data(), dims});
        const UtilityDecomposition& dec = vr[g].start.decomposition;
        for (std::size_t mask = 0; mask < (std::size_t{1} << dims); ++mask) {
            bool ok = true;
            for (std::size_t d = 0; d < dims; ++d) {
                const bool step = (mask >> d) & 1u;
                if (step && idx[d] + 1 >= grid.axis_size(d)) ok = false;
                up[d] = idx[d] + (step ? 1 : 0);
            }
            if (!ok) continue;
            const std::size_t v = grid.flatten({up.data(), dims});
            const double term = vr[v].best_utility - dec.utility(spec, vr[v].value);
            if (term > w.loss) {
                w.loss = term;
                w.cell_lower = vr[g].value;
                w.vertex = vr[v].value;
            }
        }
    }
    return w;
}

WorstTerm estimate_from_vertices(const ControlGrid& grid, const std::vector<VertexResult>& vr) {
    if (vr.size() != grid.points()) throw std::invalid_argument("estimate: vertex table does not match grid");
    WorstTerm w;
    w.loss = -std::numeric_limits<double>::infinity();
    for (const auto& r : vr) {
        const double term = r.best_utility - r.start.utility;
        if (term > w.loss) {
            w.loss = term;
            w.cell_lower = r.value;
            w.vertex = r.value;
        }
    }
    return w;
}

Profile piecewise_constant_profile(const Setting& s, const Profile& candidate, std::size_t grid_points) {
    std::vector<StrategyPtr> out(candidate.size());
    std::map<const InterpolatedStrategy*, StrategyPtr> done;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const BidderSpec& spec = s.domain.bidder(i);
        if (spec.role == Role::FixedTruthful) {
            out[i] = candidate.shared(i);
            continue;
        }
        const InterpolatedStrategy* key = candidate.shared(i).get();
        if (!done.count(key))
            done[key] = std::make_shared<const InterpolatedStrategy>(
                candidate.strategy(i).to_piecewise_constant(ControlGrid::even_box(spec, grid_points)));
        out[i] = done[key];
    }
    return Profile(std::move(out));
}

namespace {

EpsilonReport run(const Setting& s, const Profile& pwc, const VerificationConfig& cfg, bool with_bound) {
    const auto bidders = verified_bidders(s, cfg);
    EpsilonReport rep;
    rep.method = with_bound ? "theorem_bound" : "grid_estimate";
    rep.parameters = parameters(s, cfg, bidders);
    double bound = -std::numeric_limits<double>::infinity();
    double est = -std::numeric_limits<double>::infinity();
    for (int i : bidders) {
        const InterpolatedStrategy& own = pwc.strategy(static_cast<std::size_t>(i));
        if (own.mode() != Interpolation::Constant)
            throw std::invalid_argument("verification expects piecewise-constant strategies");
        const BidderSpec& spec = s.domain.bidder(static_cast<std::size_t>(i));
        const auto vr = evaluate_vertices(s, pwc, i, own.grid(), cfg);
        WorstTerm e = estimate_from_vertices(own.grid(), vr);
        e.bidder = i;
        rep.worst_estimate.push_back(e);
        est = std::max(est, e.loss);
        if (with_bound) {
            WorstTerm b = bound_from_vertices(spec, own.grid(), vr);
            b.bidder = i;
            rep.worst.push_back(b);
            bound = std::max(bound, b.loss);
        }
    }
    if (with_bound) {
        rep.epsilon = bound;
        rep.estimate = est;
    } else {
        rep.epsilon = est;
        rep.worst = rep.worst_estimate;
    }
    return rep;
}

}  // namespace

EpsilonReport theorem_bound(const Setting& s, const Profile& pwc, const VerificationConfig& cfg) {
    if (!s.domain.independent)
        throw BoundNotApplicable("the theorem bound needs independent valuations; use the grid estimate");
    return run(s, pwc, cfg, true);
}

EpsilonReport grid_estimate(const Setting& s, const Profile& pwc, const VerificationConfig& cfg) {
    return run(s, pwc, cfg, false);
}

EpsilonReport verify(const Setting& s, const Profile& candidate, const VerificationConfig& cfg) {
    const Profile pwc = piecewise_constant_profile(s, candidate, cfg.grid_points);
    VerificationMethod m = cfg.method;
    if (m == VerificationMethod::Auto)
        m = s.domain.independent ? VerificationMethod::TheoremBound : VerificationMethod::GridEstimate;
    return m == VerificationMethod::TheoremBound ? theorem_bound(s, pwc, cfg) : grid_estimate(s, pwc, cfg);
}

std::vector<SweepRow> bound_estimate_sweep(const Setting& s, const Profile& candidate, std::size_t max_level,
                                           const VerificationConfig& cfg) {
    if (!s.domain.independent) throw BoundNotApplicable("the sweep compares the bound, which needs independence");
    if (max_level < 1 || max_level > 24) throw std::invalid_argument("sweep level must lie in [1, 24]");
    const std::size_t finest = (std::size_t{1} << max_level) + 1;
    const Profile pwc = piecewise_constant_profile(s, candidate, finest);
    std::vector<SweepRow> rows;
    for (int i : verified_bidders(s, cfg)) {
        const BidderSpec& spec = s.domain.bidder(static_cast<std::size_t>(i));
        if (spec.value_dim() != 1) throw std::invalid_argument("the sweep handles 1-D bidders only");
        const ControlGrid& fine = pwc.strategy(static_cast<std::size_t>(i)).grid();
        const auto vr = evaluate_vertices(s, pwc, i, fine, cfg);
        for (std::size_t level = 1; level <= max_level; ++level) {
            const std::size_t stride = std::size_t{1} << (max_level - level);
            std::vector<double> axis;
            std::vector<VertexResult> sub;
            for (std::size_t j = 0; j < fine.points(); j += stride) {
                axis.push_back(fine.axis(0)[j]);
                sub.push_back(vr[j]);
            }
            ControlGrid g({axis});
            rows.push_back({i, level, g.points(), bound_from_vertices(spec, g, sub).loss,
                            estimate_from_vertices(g, sub).loss});
        }
    }
    return rows;
}

}  // namespace bne
