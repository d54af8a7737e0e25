#include <doctest.h>

#include <random>

#include "bne/core/domains.hpp"
#include "bne/strategies/strategy.hpp"

using namespace bne;

namespace {

InterpolatedStrategy line(std::vector<double> axis, std::vector<double> bids, Interpolation m) {
    return InterpolatedStrategy(ControlGrid({std::move(axis)}), 1, std::move(bids), m);
}

}  // namespace

TEST_SUITE("strategies") {

TEST_CASE("interpolation modes") {
    const auto lin = line({0, 1}, {0, 1}, Interpolation::Multilinear);
    CHECK(lin.evaluate(Valuation{0.25})[0] == doctest::Approx(0.25));
    const auto cst = line({0, 1}, {0, 1}, Interpolation::Constant);
    CHECK(cst.evaluate(Valuation{0.999})[0] == 0.0);
    for (const auto* s : {&lin, &cst}) {
        CHECK(s->evaluate(Valuation{0.0})[0] == 0.0);
        CHECK(s->evaluate(Valuation{1.0})[0] == 1.0);
    }
}

TEST_CASE("coverage is enforced") {
    const auto s = line({0, 1}, {0, 1}, Interpolation::Multilinear);
    CHECK_THROWS_AS(s.evaluate(Valuation{1.5}), CoverageError);
    CHECK_THROWS_AS(s.evaluate(Valuation{-0.1}), CoverageError);
    CHECK_THROWS(line({0, 1}, {0, -1}, Interpolation::Multilinear));
}

TEST_CASE("piecewise-constant conversion") {
    const auto id = line({0, 0.5, 1}, {0, 0.5, 1}, Interpolation::Multilinear);
    const auto pc = id.to_piecewise_constant(ControlGrid({{0, 0.5, 1}}));
    CHECK(pc.mode() == Interpolation::Constant);
    CHECK(pc.evaluate(Valuation{0.2})[0] == 0.0);
    CHECK(pc.evaluate(Valuation{0.49})[0] == 0.0);
    CHECK(pc.evaluate(Valuation{0.5})[0] == 0.5);
    CHECK(pc.evaluate(Valuation{0.99})[0] == 0.5);
    CHECK(pc.evaluate(Valuation{1.0})[0] == 1.0);

    const auto constant = line({0, 1}, {0.3, 0.3}, Interpolation::Multilinear);
    const auto cc = constant.to_piecewise_constant(ControlGrid::even(0, 1, 17));
    for (double v : {0.0, 0.13, 0.5, 0.77, 1.0}) CHECK(cc.evaluate(Valuation{v})[0] == 0.3);

    // Finer conversions agree with coarser ones at shared lower corners.
    const auto curve = line({0, 0.3, 1}, {0, 0.4, 0.5}, Interpolation::Multilinear);
    const auto coarse = curve.to_piecewise_constant(ControlGrid::even(0, 1, 5));
    const auto fine = curve.to_piecewise_constant(ControlGrid::even(0, 1, 9));
    for (double v : {0.0, 0.25, 0.5, 0.75}) CHECK(coarse.evaluate(Valuation{v})[0] == fine.evaluate(Valuation{v})[0]);
}

TEST_CASE("two-dimensional grids") {
    const ControlGrid g = ControlGrid::even_box(make_llllgg_domain().bidder(0), 3);
    CHECK(g.points() == 9);
    std::vector<double> bids(18);
    for (std::size_t p = 0; p < 9; ++p) {
        const auto v = g.point(p);
        bids[2 * p] = v[0];
        bids[2 * p + 1] = v[1];
    }
    const InterpolatedStrategy s(g, 2, bids, Interpolation::Multilinear);
    const auto b = s.evaluate(Valuation{0.3, 0.8});
    CHECK(b[0] == doctest::Approx(0.3));
    CHECK(b[1] == doctest::Approx(0.8));
    const auto pc = s.to_piecewise_constant(g);
    CHECK(pc.evaluate(Valuation{0.3, 0.8})[0] == 0.0);
    CHECK(pc.evaluate(Valuation{0.3, 0.8})[1] == 0.5);
    CHECK(pc.evaluate(Valuation{1.0, 1.0})[0] == 1.0);
}

TEST_CASE("cells partition the box") {
    const ControlGrid g = ControlGrid::even_box(make_llllgg_domain().bidder(0), 3);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::size_t counts[4] = {};
    for (int k = 0; k < 1000000; ++k) {
        const double x = u(rng), y = u(rng);
        const std::size_t i = g.locate(0, x), j = g.locate(1, y);
        REQUIRE(i < 2);
        REQUIRE(j < 2);
        REQUIRE(g.axis(0)[i] <= x);
        REQUIRE(x < g.axis(0)[i + 1]);
        REQUIRE(g.axis(1)[j] <= y);
        REQUIRE(y < g.axis(1)[j + 1]);
        ++counts[2 * i + j];
    }
    for (auto c : counts) CHECK(c > 0);
}

TEST_CASE("truthful profiles share group strategies") {
    const Domain d = make_llllgg_domain();
    const Profile p = Profile::truthful(d);
    CHECK(p.shared(0) == p.shared(3));
    CHECK(p.shared(4) == p.shared(5));
    CHECK(p.shared(0) != p.shared(4));
    const auto b = p.bid(4, Valuation{1.2, 0.4});
    CHECK(b[0] == doctest::Approx(1.2));
    CHECK(b[1] == doctest::Approx(0.4));
}

TEST_CASE("assign updates the whole group") {
    const Domain d = make_llg_domain({});
    Profile p = Profile::truthful(d);
    auto s = std::make_shared<const InterpolatedStrategy>(line({0, 1}, {0, 0.5}, Interpolation::Multilinear));
    p.assign(d, 0, s);
    CHECK(p.bid(1, Valuation{1.0})[0] == 0.5);
    CHECK(p.bid(2, Valuation{1.0})[0] == 1.0);
}

}
