#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "bne/core/domains.hpp"
#include "bne/mechanisms/llg.hpp"
#include "bne/sampling/estimator.hpp"
#include "bne/sampling/sobol.hpp"
#include "bne/sampling/stream.hpp"
#include "bne/sampling/value_sampler.hpp"
#include "bne/util/hash.hpp"

using namespace bne;

namespace {

// Reference values from scipy.stats.qmc.Sobol(d=8, scramble=False).random(8).
const double kSobolRef[8][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
    {0.75, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75},
    {0.25, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25},
    {0.375, 0.375, 0.625, 0.875, 0.375, 0.125, 0.375, 0.875},
    {0.875, 0.875, 0.125, 0.375, 0.875, 0.625, 0.875, 0.375},
    {0.625, 0.125, 0.875, 0.625, 0.625, 0.875, 0.125, 0.125},
    {0.125, 0.625, 0.375, 0.125, 0.125, 0.375, 0.625, 0.625},
};

Profile llg_truthful(double alpha = 1.0, double gamma = 0.0) {
    return Profile::truthful(make_llg_domain({alpha, gamma, false}));
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("Sobol points match the reference") {
    SobolSequence s(8);
    for (std::uint64_t i = 0; i < 8; ++i) {
        const auto p = s.point(i);
        for (std::size_t d = 0; d < 8; ++d) CHECK(p[d] == kSobolRef[i][d]);
    }
    // scipy, d = 32, point 13, dimensions 10, 21, 32.
    SobolSequence wide(32);
    const auto p = wide.point(13);
    CHECK(p[9] == 0.4375);
    CHECK(p[20] == 0.5625);
    CHECK(p[31] == 0.4375);
    CHECK_THROWS(SobolSequence(33));
}

TEST_CASE("Sobol first nonzero points in one dimension") {
    SobolSequence s(1);
    CHECK(s.point(1)[0] == 0.5);
    CHECK(s.point(2)[0] == 0.75);
    CHECK(s.point(3)[0] == 0.25);
}

TEST_CASE("Sobol stratification") {
    SobolSequence s(6);
    for (int k = 0; k <= 10; ++k) {
        const std::size_t n = std::size_t{1} << k;
        for (std::size_t d = 0; d < 6; ++d) {
            std::vector<int> hits(n, 0);
            for (std::size_t i = 0; i < n; ++i) ++hits[static_cast<std::uint64_t>(s.integer(i, d)) >> (32 - k)];
            CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
    }
}

TEST_CASE("Gray-code fill agrees with direct evaluation") {
    SobolSequence s(5);
    const std::vector<std::uint32_t> shift = {0, 1, 0xdeadbeef, 7, 0};
    std::vector<std::uint32_t> out(37 * 5);
    s.fill_integers(91, 37, shift, out);
    for (std::size_t k = 0; k < 37; ++k)
        for (std::size_t d = 0; d < 5; ++d) CHECK(out[k * 5 + d] == (s.integer(91 + k, d) ^ shift[d]));
}

TEST_CASE("streams are deterministic and keyed") {
    for (StreamKind kind : {StreamKind::Sobol, StreamKind::Pseudo}) {
        const auto a = SampleStream(kind, 3, 42).generate(100);
        const auto b = SampleStream(kind, 3, 42).generate(100);
        const auto c = SampleStream(kind, 3, 43).generate(100);
        CHECK(a == b);
        CHECK(a != c);
        CHECK(std::all_of(a.begin(), a.end(), [](double x) { return x > 0.0 && x < 1.0; }));
        const auto skipped = SampleStream(kind, 3, 42, 10).generate(90);
        CHECK(std::equal(skipped.begin(), skipped.end(), a.begin() + 30));
    }
}

TEST_CASE("derived keys differ per word") {
    std::set<std::uint64_t> keys;
    for (std::uint64_t a = 0; a < 20; ++a)
        for (std::uint64_t b = 0; b < 20; ++b) keys.insert(derive_key({a, b}));
    CHECK(keys.size() == 400);
    CHECK(derive_key({1, 2}) != derive_key({2, 1}));
}

TEST_CASE("LLG value sampler") {
    LlgSampler corr(1.0, 1.0);
    std::vector<Valuation> vals(3);
    const std::vector<double> u = {0.3, 0.9};
    corr.sample_conditional(0, Valuation{0.4}, u, vals);
    CHECK(vals[1][0] == 0.4);
    CHECK(vals[2][0] == doctest::Approx(1.8));

    LlgSampler indep(1.0, 0.0);
    indep.sample_conditional(1, Valuation{0.4}, u, vals);
    CHECK(vals[0][0] == doctest::Approx(0.3));
    CHECK(indep.independent());
    CHECK_FALSE(corr.independent());

    LlgSampler sq(2.0, 0.0);
    CHECK(sq.local_quantile(0.25) == doctest::Approx(0.5));  // P(V <= 0.5) = 0.25
}

TEST_CASE("importance truncation") {
    auto [t, w] = LlgImportanceSampler::truncation(0.3, 0.5);
    CHECK(t == doctest::Approx(0.8));
    CHECK(w == doctest::Approx(0.4));
    std::tie(t, w) = LlgImportanceSampler::truncation(1.5, 0.9);
    CHECK(t == 2.0);
    CHECK(w == 1.0);
    std::tie(t, w) = LlgImportanceSampler::truncation(0.0, 0.0);
    CHECK(w == 0.0);
}

TEST_CASE("a bidder that always loses has zero utility") {
    const Domain d = make_llg_domain({1.0, 0.0, false});
    auto sampler = std::make_shared<const LlgSampler>(1.0, 0.0);
    auto mech = std::make_shared<const LlgMechanism>(LlgRule::FirstPrice);
    MonteCarloEstimator est(d, sampler, mech, StreamKind::Sobol);
    // Truthful partner at value 1 and a global who bids above 2: build that profile explicitly.
    std::vector<StrategyPtr> s(3);
    s[0] = s[1] = std::make_shared<const InterpolatedStrategy>(ControlGrid::even(0, 1, 2), 1, std::vector<double>{0, 0},
                                                                Interpolation::Multilinear);
    s[2] = std::make_shared<const InterpolatedStrategy>(ControlGrid::even(0, 2, 2), 1, std::vector<double>{3, 3},
                                                        Interpolation::Multilinear);
    const auto e = estimate_expected_utility(est, Profile(s), 0, Valuation{0.8}, Bid{0.1}, 1, 1000);
    CHECK(e.utility == 0.0);
    CHECK(e.decomposition.empty_prob() == 1.0);
}

TEST_CASE("estimates are deterministic") {
    const Domain d = make_llg_domain({1.0, 0.0, false});
    auto sampler = std::make_shared<const LlgSampler>(1.0, 0.0);
    auto mech = std::make_shared<const LlgMechanism>(LlgRule::Proxy);
    MonteCarloEstimator est(d, sampler, mech, StreamKind::Sobol);
    const auto a = estimate_expected_utility(est, llg_truthful(), 0, Valuation{0.6}, Bid{0.5}, 77, 5000);
    const auto b = estimate_expected_utility(est, llg_truthful(), 0, Valuation{0.6}, Bid{0.5}, 77, 5000);
    CHECK(std::bit_cast<std::uint64_t>(a.utility) == std::bit_cast<std::uint64_t>(b.utility));
}

TEST_CASE("extrapolation identity") {
    const Domain d = make_llg_domain({1.0, 0.0, false});
    auto sampler = std::make_shared<const LlgSampler>(1.0, 0.0);
    for (LlgRule r : {LlgRule::FirstPrice, LlgRule::VcgNearest, LlgRule::Proxy}) {
        auto mech = std::make_shared<const LlgMechanism>(r);
        MonteCarloEstimator mc(d, sampler, mech, StreamKind::Sobol);
        LlgImportanceEstimator is(d, sampler, r, StreamKind::Sobol);
        for (const UtilityEstimator* est : {static_cast<const UtilityEstimator*>(&mc), static_cast<const UtilityEstimator*>(&is)}) {
            const auto set = est->sample(llg_truthful(), 0, Valuation{0.3}, 5, 4000);
            const auto at = set->evaluate(Valuation{0.3}, Bid{0.25});
            const auto direct = set->evaluate(Valuation{0.9}, Bid{0.25});
            CHECK(at.decomposition.utility(d.bidder(0), Valuation{0.9}) == doctest::Approx(direct.utility).epsilon(1e-12));
        }
    }
}

TEST_CASE("common random numbers") {
    const Domain d = make_llg_domain({1.0, 0.0, false});
    auto sampler = std::make_shared<const LlgSampler>(1.0, 0.0);
    auto mech = std::make_shared<const LlgMechanism>(LlgRule::VcgNearest);
    MonteCarloEstimator est(d, sampler, mech, StreamKind::Pseudo);
    const auto set = est.sample(llg_truthful(), 0, Valuation{0.7}, 3, 2000);
    CHECK(common_random_compare(*set, Valuation{0.7}, Bid{0.4}, Bid{0.4}) == 0.0);

    // Paired differences vary less than differences of independent estimates.
    std::vector<double> paired, independent;
    for (std::uint64_t r = 0; r < 100; ++r) {
        const auto s1 = est.sample(llg_truthful(), 0, Valuation{0.7}, 1000 + r, 500);
        const auto s2 = est.sample(llg_truthful(), 0, Valuation{0.7}, 5000 + r, 500);
        paired.push_back(common_random_compare(*s1, Valuation{0.7}, Bid{0.5}, Bid{0.45}));
        independent.push_back(s1->evaluate(Valuation{0.7}, Bid{0.5}).utility - s2->evaluate(Valuation{0.7}, Bid{0.45}).utility);
    }
    auto var = [](const std::vector<double>& x) {
        const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
        double s = 0.0;
        for (double y : x) s += (y - m) * (y - m);
        return s / static_cast<double>(x.size() - 1);
    };
    CHECK(var(paired) <= var(independent));
}

TEST_CASE("quadrature agrees with Monte Carlo") {
    for (double gamma : {0.0, 0.5, 1.0}) {
        const Domain d = make_llg_domain({1.0, gamma, false});
        auto sampler = std::make_shared<const LlgSampler>(1.0, gamma);
        auto mech = std::make_shared<const LlgMechanism>(LlgRule::NearestBid);
        LlgQuadratureEstimator q(d, sampler, mech, 512);
        MonteCarloEstimator mc(d, sampler, mech, StreamKind::Pseudo);
        const auto Q = estimate_expected_utility(q, llg_truthful(1.0, gamma), 0, Valuation{0.6}, Bid{0.45}, 0, 0);
        const auto set = mc.sample(llg_truthful(1.0, gamma), 0, Valuation{0.6}, 9, 1000000);
        const auto M = set->evaluate(Valuation{0.6}, Bid{0.45});
        // Utility per sample is bounded by 0.6 in absolute value.
        const double se = 0.6 / std::sqrt(1e6);
        CHECK(std::abs(Q.utility - M.utility) <= 3.0 * se);
    }
}

TEST_CASE("quadrature is exact for a constant integrand") {
    const Domain d = make_llg_domain({1.0, 0.0, false});
    auto sampler = std::make_shared<const LlgSampler>(1.0, 0.0);
    auto mech = std::make_shared<const LlgMechanism>(LlgRule::FirstPrice);
    std::vector<StrategyPtr> s(3);
    s[0] = s[1] = std::make_shared<const InterpolatedStrategy>(ControlGrid::even(0, 1, 2), 1, std::vector<double>{0.2, 0.2},
                                                                Interpolation::Multilinear);
    s[2] = std::make_shared<const InterpolatedStrategy>(ControlGrid::even(0, 2, 2), 1, std::vector<double>{0.5, 0.5},
                                                        Interpolation::Multilinear);
    for (std::size_t g : {1, 7}) {
        LlgQuadratureEstimator q(d, sampler, mech, g);
        const auto e = estimate_expected_utility(q, Profile(s), 0, Valuation{0.6}, Bid{0.35}, 0, 0);
        CHECK(e.utility == doctest::Approx(0.25).epsilon(1e-12));
    }
}

}
