#include <doctest.h>

#include <cmath>

#include "bne/core/domains.hpp"
#include "bne/mechanisms/llg.hpp"
#include "bne/oracles/synthetic.hpp"
#include "bne/search/adaptive.hpp"
#include "bne/search/dampening.hpp"
#include "bne/search/pattern_search.hpp"
#include "bne/search/search.hpp"

using namespace bne;

namespace {

// (v - b) * b with v = 1.
Objective first_price(double v) {
    return [v](const Bid& b) {
        UtilityEstimate e;
        e.utility = oracle::synthetic_utility(v, b[0]);
        return e;
    };
}

Setting llg_setting(LlgRule rule, double alpha, double gamma) {
    Setting s;
    s.domain = make_llg_domain({alpha, gamma, false});
    auto sampler = std::make_shared<const LlgSampler>(alpha, gamma);
    s.sampler = sampler;
    s.mechanism = std::make_shared<const LlgMechanism>(rule);
    s.estimators = {std::make_shared<const LlgImportanceEstimator>(s.domain, sampler, rule, StreamKind::Sobol),
                    std::make_shared<const LlgImportanceEstimator>(s.domain, sampler, rule, StreamKind::Sobol), nullptr};
    s.bid_ceiling = {2.0, 2.0, 4.0};
    return s;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("pattern search shrink arithmetic") {
    // Constant objective: no move is ever strictly better, so the whole budget shrinks.
    const Objective flat = [](const Bid&) { return UtilityEstimate{}; };
    auto r = pattern_search(flat, Bid{0.3}, {3, 0.1, 5}, 2.0);
    CHECK(r.final_spacing == doctest::Approx(0.1 / 32));
    CHECK(r.bid[0] == 0.3);
    r = pattern_search(flat, Bid{0.3}, {3, 0.1, 20}, 2.0);
    CHECK(r.final_spacing == doctest::Approx(9.5367431640625e-08));
    CHECK(r.final_spacing < 1e-6);
}

TEST_CASE("pattern search finds the closed-form optimum") {
    const PatternSearchConfig cfg{3, 0.1, 20};
    const auto r = pattern_search(first_price(1.0), Bid{0.25}, cfg, 2.0);
    CHECK(std::abs(r.bid[0] - 0.5) <= 2.0 * r.final_spacing);
    CHECK(r.best.utility == doctest::Approx(0.25));
    CHECK(r.loss() == doctest::Approx(0.0625));
}

TEST_CASE("pattern search never degrades the incumbent") {
    for (double start : {0.0, 0.2, 0.5, 0.9, 1.7}) {
        for (int budget : {0, 1, 4, 12}) {
            const auto r = pattern_search(first_price(0.8), Bid{start}, {3, 0.1, budget}, 2.0);
            CHECK(r.best.utility >= r.start.utility);
            CHECK(r.bid[0] >= 0.0);
            CHECK(r.bid[0] <= 2.0);
        }
    }
}

TEST_CASE("pattern search in two dimensions") {
    const Objective f = [](const Bid& b) {
        UtilityEstimate e;
        e.utility = -(b[0] - 0.3) * (b[0] - 0.3) - (b[1] - 0.7) * (b[1] - 0.7);
        return e;
    };
    const auto r = pattern_search(f, Bid{0.0, 0.0}, {3, 0.1, 30}, 2.0);
    CHECK(r.bid[0] == doctest::Approx(0.3).epsilon(1e-4));
    CHECK(r.bid[1] == doctest::Approx(0.7).epsilon(1e-4));
}

TEST_CASE("Brent search") {
    const auto r = brent_search(first_price(1.0), Bid{0.1}, 2.0);
    CHECK(std::abs(r.bid[0] - 0.5) <= 1e-6);
    const Objective flat = [](const Bid&) {
        UtilityEstimate e;
        e.utility = 0.125;
        return e;
    };
    const auto c = brent_search(flat, Bid{0.4}, 2.0);
    CHECK(c.best.utility == 0.125);
    CHECK(c.bid[0] >= 0.0);
    CHECK(c.bid[0] <= 2.0);
}

TEST_CASE("Brent and pattern search agree") {
    for (double v : {0.1, 0.35, 0.6, 0.95}) {
        const auto p = pattern_search(first_price(v), Bid{0.0}, {3, 0.1, 20}, 2.0);
        const auto b = brent_search(first_price(v), Bid{0.0}, 2.0);
        CHECK(std::abs(p.bid[0] - b.bid[0]) <= 2.0 * p.final_spacing + 1e-6);
    }
}

TEST_CASE("dampening weight") {
    DampeningConfig cfg;
    cfg.c = 500.0;
    CHECK(dampening_weight(0.0, cfg) == doctest::Approx(0.2));
    CHECK(dampening_weight(1.0 / 500.0, cfg) == doctest::Approx(0.45));
    CHECK(dampening_weight(1e12, cfg) < 0.7);
    CHECK(dampening_weight(1e12, cfg) == doctest::Approx(0.7));
    double prev = 0.0;
    for (double l = 0.0; l < 0.1; l += 1e-4) {
        const double w = dampening_weight(l, cfg);
        CHECK(w >= prev);
        CHECK(w >= 0.2);
        CHECK(w < 0.7);
        prev = w;
    }
    cfg.adaptive = false;
    CHECK(dampening_weight(0.3, cfg) == 0.5);
}

TEST_CASE("strategy update") {
    const ControlGrid g = ControlGrid::even(0, 1, 3);
    const InterpolatedStrategy old(g, 1, {0.0, 0.5, 1.0}, Interpolation::Multilinear);
    std::vector<Bid> br = {Bid{0.0}, Bid{0.0}, Bid{0.0}};
    std::vector<double> loss = {0.0, 0.0, 0.0};
    DampeningConfig cfg;
    auto s = update_strategy(old, g, br, loss, cfg);
    CHECK(s.bid_at(2)[0] == doctest::Approx(0.8));
    cfg.adaptive = false;
    cfg.fixed = 1.0;
    s = update_strategy(old, g, br, loss, cfg);
    CHECK(s.bid_at(1)[0] == 0.0);
    br = {Bid{0.0}, Bid{0.5}, Bid{1.0}};
    s = update_strategy(old, g, br, loss, DampeningConfig{});
    for (std::size_t p = 0; p < 3; ++p) CHECK(s.bid_at(p)[0] == doctest::Approx(old.bid_at(p)[0]));
}

TEST_CASE("curvature priority") {
    using P = std::pair<double, Bid>;
    CHECK(curvature_priority(P{0.0, Bid{0.0}}, 0.5, Bid{0.25}, P{1.0, Bid{0.5}}, 0.004) == doctest::Approx(0.0));
    CHECK(curvature_priority(P{0.0, Bid{0.0}}, 0.5, Bid{0.0}, P{1.0, Bid{1.0}}, 0.004) == doctest::Approx(2.0));
    CHECK(curvature_priority(P{0.0, Bid{0.0}}, 0.003, Bid{0.0}, P{1.0, Bid{1.0}}, 0.004) == 0.0);
    CHECK(curvature_priority(std::nullopt, 0.0, Bid{0.0}, P{1.0, Bid{1.0}}, 0.004) == 0.0);
}

TEST_CASE("adaptive control points") {
    AdaptiveConfig cfg;
    auto kinked = [](double v, std::size_t) { return PointResult{Bid{v < 0.5 ? v : 0.5}, 0.0}; };
    const auto r = adaptive_best_response(0.0, 1.0, kinked, cfg);
    CHECK(r.points.size() == 40);
    CHECK(std::is_sorted(r.points.begin(), r.points.end()));
    auto count = [&](double a, double b) {
        return std::count_if(r.points.begin(), r.points.end(), [&](double x) { return x >= a && x <= b; });
    };
    CHECK(count(0.4, 0.6) > count(0.0, 0.2));

    auto linear = [](double v, std::size_t) { return PointResult{Bid{0.3 * v}, 0.0}; };
    const auto l = adaptive_best_response(0.0, 1.0, linear, cfg);
    CHECK(l.points.size() == 40);
    for (std::size_t k = 1; k < l.points.size(); ++k) CHECK(l.points[k] - l.points[k - 1] > cfg.min_interval);
}

TEST_CASE("truthful start under VCG converges at once") {
    const Setting s = llg_setting(LlgRule::Vcg, 1.0, 0.0);
    SearchConfig cfg;
    const auto out = run_search(s, Profile::truthful(s.domain), cfg);
    CHECK(out.converged);
    CHECK(out.inner_iterations == 1);
    CHECK(out.epsilon_estimate < 1e-4);
}

TEST_CASE("inner gate") {
    const Setting s = llg_setting(LlgRule::Proxy, 1.0, 0.5);
    SearchConfig cfg;
    std::vector<IterationRecord> trace;
    const auto out = run_search(s, Profile::truthful(s.domain), cfg, [&](const IterationRecord& r) { trace.push_back(r); });
    CHECK(out.converged);
    for (std::size_t k = 0; k + 1 < trace.size(); ++k)
        if (trace[k + 1].phase == "outer") CHECK(trace[k].epsilon <= 0.8 * cfg.target_epsilon);
    // Proxy, gamma = 0.5: near-zero bids at low values, steepening to about truthful at the top.
    const auto& st = out.profile.strategy(0);
    CHECK(st.evaluate(Valuation{0.1})[0] < 0.05);
    CHECK(st.evaluate(Valuation{1.0})[0] == doctest::Approx(1.0).epsilon(0.03));
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
        const double b = st.evaluate(Valuation{k / 20.0})[0];
        CHECK(b >= prev - 1e-9);
        prev = b;
    }
    const double low_slope = st.evaluate(Valuation{0.2})[0] - st.evaluate(Valuation{0.1})[0];
    const double high_slope = st.evaluate(Valuation{1.0})[0] - st.evaluate(Valuation{0.9})[0];
    CHECK(high_slope > low_slope);
}

TEST_CASE("synthetic search finds v / 2") {
    const Setting s = oracle::make_synthetic_setting();
    SearchConfig cfg;
    cfg.target_epsilon = 1e-4;
    const auto out = run_search(s, Profile::truthful(s.domain), cfg);
    CHECK(out.converged);
    for (double v : {0.1, 0.4, 0.8}) CHECK(out.profile.bid(0, Valuation{v})[0] == doctest::Approx(v / 2).epsilon(0.02));
}

TEST_CASE("search is independent of the worker count") {
    const Setting s = llg_setting(LlgRule::NearestBid, 2.0, 0.0);
    SearchConfig one;
    SearchConfig many = one;
    many.workers = 3;
    const auto a = run_search(s, Profile::truthful(s.domain), one);
    const auto b = run_search(s, Profile::truthful(s.domain), many);
    CHECK(a.profile.strategy(0).raw_bids() == b.profile.strategy(0).raw_bids());
    CHECK(a.epsilon_estimate == b.epsilon_estimate);
}

}
