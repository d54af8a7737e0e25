#include <doctest.h>

#include <random>

#include "bne/core/domains.hpp"
#include "bne/mechanisms/core_payments.hpp"
#include "bne/mechanisms/llg.hpp"
#include "bne/mechanisms/llllgg.hpp"
#include "bne/mechanisms/small_solvers.hpp"
#include "bne/oracles/brute_force.hpp"

using namespace bne;

namespace {

std::vector<Bid> random_llllgg_bids(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Bid> b;
    for (int j = 0; j < 6; ++j) {
        const double scale = j < 4 ? 1.0 : 2.0;
        b.push_back(Bid{scale * u(rng), scale * u(rng)});
    }
    return b;
}

}  // namespace

TEST_SUITE("mechanisms") {

TEST_CASE("LLG allocation") {
    CHECK(llg_allocate(0.5, 0.6, 1.0).wins(0));
    CHECK(llg_allocate(0.2, 0.3, 1.0).wins(2));
    CHECK(llg_allocate(0.5, 0.5, 1.0).wins(0));  // tie goes to the locals
}

TEST_CASE("LLG payments") {
    const auto a = llg_allocate(0.5, 0.6, 1.0);
    auto p = llg_payments(LlgRule::Vcg, 0.5, 0.6, 1.0, a);
    CHECK(p[0] == doctest::Approx(0.4));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == 0.0);
    p = llg_payments(LlgRule::VcgNearest, 0.5, 0.6, 1.0, a);
    CHECK(p[0] == doctest::Approx(0.45));
    CHECK(p[1] == doctest::Approx(0.55));
    p = llg_payments(LlgRule::FirstPrice, 0.5, 0.6, 1.0, a);
    CHECK(p[0] == 0.5);
    CHECK(p[1] == 0.6);
    p = llg_payments(LlgRule::Proxy, 0.2, 0.9, 1.0, a);
    CHECK(p[0] == doctest::Approx(0.2));
    CHECK(p[1] == doctest::Approx(0.8));
    p = llg_payments(LlgRule::Proportional, 0.5, 0.6, 1.0, a);
    CHECK(p[0] == doctest::Approx(0.5 / 1.1));
    p = llg_payments(LlgRule::NearestBid, 0.5, 0.6, 1.0, a);
    CHECK(p[0] == doctest::Approx(0.45));
    CHECK(p[1] == doctest::Approx(0.55));
    const auto g = llg_allocate(0.2, 0.3, 1.0);
    CHECK(llg_payments(LlgRule::Vcg, 0.2, 0.3, 1.0, g)[2] == doctest::Approx(0.5));
    CHECK(llg_payments(LlgRule::FirstPrice, 0.2, 0.3, 1.0, g)[2] == 1.0);
    CHECK_THROWS(llg_payments(LlgRule::Vcg, 0.2, 0.3, 1.0, a));
}

TEST_CASE("LLG core-selecting rules charge minimum core revenue") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        const double b1 = u(rng), b2 = u(rng), b3 = 2.0 * u(rng);
        const auto a = llg_allocate(b1, b2, b3);
        if (!a.wins(0)) continue;
        for (LlgRule r : {LlgRule::VcgNearest, LlgRule::NearestBid, LlgRule::Proxy, LlgRule::Proportional}) {
            const auto p = llg_payments(r, b1, b2, b3, a);
            CHECK(p[0] + p[1] == doctest::Approx(b3).epsilon(1e-12));
            CHECK(p[0] <= b1 + 1e-12);
            CHECK(p[1] <= b2 + 1e-12);
            CHECK(p[0] >= std::max(0.0, b3 - b2) - 1e-12);
        }
    }
}

TEST_CASE("LLG closed-form response agrees with full runs") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto table = std::make_shared<BidTable>(500, 3);
    for (std::size_t k = 0; k < 500; ++k)
        for (std::size_t j = 0; j < 3; ++j) table->at(k, j) = Bid{(j == 2 ? 2.0 : 1.0) * u(rng)};
    for (LlgRule r : {LlgRule::FirstPrice, LlgRule::Vcg, LlgRule::VcgNearest, LlgRule::NearestBid, LlgRule::Proxy,
                      LlgRule::Proportional}) {
        LlgMechanism m(r);
        for (int i = 0; i < 3; ++i) {
            auto fast = m.prepare(i, table);
            FullRunResponse slow(m, i, table);
            for (double b : {0.0, 0.3, 0.7, 1.4}) {
                OutcomeTally x, y;
                fast->tally(Bid{b}, {}, x);
                slow.tally(Bid{b}, {}, y);
                CHECK(x.win[0] == y.win[0]);
                CHECK(x.payment == doctest::Approx(y.payment).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("LLLLGG winner determination examples") {
    const Domain d = make_llllgg_domain();
    std::vector<Bid> b = {Bid{1, 0}, Bid{1, 0}, Bid{1, 0}, Bid{1, 0}, Bid{0, 0}, Bid{0, 0}};
    auto a = llllgg_winner_determination(d, b);
    for (int j = 0; j < 4; ++j) CHECK(a.atom[static_cast<std::size_t>(j)] == 0);
    CHECK_FALSE(a.wins(4));
    CHECK_FALSE(a.wins(5));

    b = {Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{10, 0}, Bid{0, 10}};
    a = llllgg_winner_determination(d, b);
    CHECK(a.wins(4) != a.wins(5));

    b = {Bid{1, 1}, Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{0, 0}};
    a = llllgg_winner_determination(d, b);
    CHECK(a.wins(0));
    CHECK(a.feasible());
}

TEST_CASE("LLLLGG winner determination matches enumeration") {
    const Domain d = make_llllgg_domain();
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        const auto b = random_llllgg_bids(rng);
        const auto a = llllgg_winner_determination(d, b);
        const auto o = oracle::enumerate_assignment(d, b, 63);
        for (std::size_t j = 0; j < 6; ++j) CHECK(a.atom[j] == o.atom[j]);
    }
}

TEST_CASE("LLLLGG coalition values match enumeration") {
    const Domain d = make_llllgg_domain();
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        const auto b = random_llllgg_bids(rng);
        const auto W = llllgg_coalition_values(b);
        for (std::uint32_t m = 0; m < 64; ++m)
            CHECK(W[m] == doctest::Approx(oracle::enumerate_assignment(d, b, m).welfare).epsilon(1e-12));
    }
}

TEST_CASE("LLLLGG VCG-nearest") {
    const Domain d = make_llllgg_domain();
    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        const auto b = random_llllgg_bids(rng);
        LlllggMechanism m(LlllggRule::VcgNearest);
        const Outcome o = m.run(b);
        const auto ref = oracle::vcg_nearest(d, b);
        const auto core = oracle::enumerate_core(d, b);
        double total = 0.0;
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(o.payment[j] == doctest::Approx(ref[j]).epsilon(1e-6));
            total += o.payment[j];
        }
        CHECK(total == doctest::Approx(oracle::min_core_revenue(core)).epsilon(1e-9));
    }
}

TEST_CASE("VCG-nearest equals VCG when VCG is in the core") {
    const Domain d = make_llllgg_domain();
    // Single winner: VCG payment is the second-highest competing welfare, always in the core.
    const std::vector<Bid> b = {Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{0, 0}, Bid{1.5, 0}, Bid{0.9, 0}};
    LlllggMechanism m(LlllggRule::VcgNearest);
    const Outcome o = m.run(b);
    CHECK(o.payment[4] == doctest::Approx(0.9));
    const auto v = oracle::enumerate_vcg(d, b);
    CHECK(v[4] == doctest::Approx(0.9));
}

TEST_CASE("embedded LLG instance") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    LlllggMechanism m(LlllggRule::VcgNearest);
    for (int k = 0; k < 200; ++k) {
        const double b1 = u(rng), b2 = u(rng), b3 = 2.0 * u(rng);
        const std::vector<Bid> b = {Bid{b1, 0}, Bid{b2, 0}, Bid{0, 0}, Bid{0, 0}, Bid{b3, 0}, Bid{0, 0}};
        const Outcome o = m.run(b);
        const auto a = llg_allocate(b1, b2, b3);
        if (b1 + b2 == b3) continue;
        const auto p = llg_payments(LlgRule::VcgNearest, b1, b2, b3, a);
        CHECK(o.payment[0] == doctest::Approx(p[0]).epsilon(1e-9));
        CHECK(o.payment[1] == doctest::Approx(p[1]).epsilon(1e-9));
        CHECK(o.payment[4] == doctest::Approx(p[2]).epsilon(1e-9));
    }
}

TEST_CASE("LLLLGG first-price reduced response agrees with full runs") {
    std::mt19937_64 rng(8);
    auto table = std::make_shared<BidTable>(300, 6);
    for (std::size_t k = 0; k < 300; ++k) {
        const auto b = random_llllgg_bids(rng);
        for (std::size_t j = 0; j < 6; ++j) table->at(k, j) = b[j];
    }
    LlllggMechanism m(LlllggRule::FirstPrice);
    for (int i : {0, 3, 4}) {
        auto fast = m.prepare(i, table);
        FullRunResponse slow(m, i, table);
        for (const Bid& own : {Bid{0.0, 0.0}, Bid{0.4, 0.1}, Bid{0.9, 1.2}, Bid{1.7, 0.2}}) {
            OutcomeTally x, y;
            fast->tally(own, {}, x);
            slow.tally(own, {}, y);
            CHECK(x.win[0] == y.win[0]);
            CHECK(x.win[1] == y.win[1]);
            CHECK(x.payment == doctest::Approx(y.payment).epsilon(1e-12));
        }
    }
}

TEST_CASE("core constraints and VCG from coalition values") {
    // LLG: bidders 0, 1 locals (A, B), 2 global (AB); bids 0.5, 0.6, 1.0.
    std::array<double, 8> W{};
    for (std::uint32_t m = 0; m < 8; ++m) {
        const double locals = (m & 1 ? 0.5 : 0.0) + (m & 2 ? 0.6 : 0.0);
        W[m] = std::max(locals, m & 4 ? 1.0 : 0.0);
    }
    const std::vector<int> ids = {0, 1};
    const std::vector<double> bids = {0.5, 0.6};
    const auto vcg = vcg_payments(W, 3, ids, bids);
    CHECK(vcg[0] == doctest::Approx(0.4));
    CHECK(vcg[1] == doctest::Approx(0.5));
    const auto c = make_core_constraints(W, 3, ids, bids);
    CHECK(c.rhs[3] == doctest::Approx(1.0));
    CHECK(minimum_core_revenue(c) == doctest::Approx(1.0));
    const auto q = nearest_core_payments(c, vcg);
    CHECK(q[0] == doctest::Approx(0.45));
    CHECK(q[1] == doctest::Approx(0.55));
    CHECK(core_violation(c, vcg) == doctest::Approx(0.1));
    CHECK(core_violation(c, q) <= 1e-12);
}

TEST_CASE("small LP and QP") {
    // min x + y  s.t.  x + y >= 1, x >= 0.2;  0 <= x, y <= 1.
    Eigen::MatrixXd A(2, 2);
    A << 1, 1, 1, 0;
    Eigen::VectorXd b(2), c(2), up(2);
    b << 1, 0.2;
    c << 1, 1;
    up << 1, 1;
    const auto lp = solve_lp(A, b, c, up);
    REQUIRE(lp.feasible);
    CHECK(lp.x.sum() == doctest::Approx(1.0));
    CHECK(lp.x[0] >= 0.2 - 1e-12);

    // Project (0, 0) onto {x + y = 1, x >= 0.7}.
    Eigen::MatrixXd G(1, 2);
    G << 1, 0;
    Eigen::VectorXd h(1), e(2), r(2), x0(2);
    h << 0.7;
    e << 1, 1;
    r << 0, 0;
    x0 << 1, 0;
    const auto x = solve_projection_qp(G, h, e, 1.0, r, x0);
    CHECK(x[0] == doctest::Approx(0.7));
    CHECK(x[1] == doctest::Approx(0.3));
}

}
