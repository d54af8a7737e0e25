#include <doctest.h>

#include "bne/cli/commands.hpp"
#include "bne/cli/config.hpp"
#include "bne/cli/io.hpp"

using namespace bne;

TEST_SUITE("cli") {

TEST_CASE("defaults per domain") {
    const RunConfig llg = build_config({});
    CHECK(llg.domain == "llg");
    CHECK(llg.search.inner_points == 40);
    CHECK(llg.search.outer_points == 64);
    CHECK(llg.verification.grid_points == 8193);
    CHECK(llg.search.dampening.c == doctest::Approx(500.0));
    const RunConfig l6 = build_config({{"domain", "llllgg"}});
    CHECK(l6.rule == "first_price");
    CHECK(l6.search.inner_points == 15);
    CHECK(l6.search.outer_points == 20);
    CHECK(l6.verification.grid_points == 25);
    CHECK(l6.search.search_samples == 20000);
    CHECK(l6.verification.samples == 40000);
}

TEST_CASE("manifest round trip") {
    RunConfig c = build_config(parse_key_values("rule = proxy\nalpha = 2\ngamma=0.5 # comment\nseed = 17\n", "test"));
    CHECK(c.rule == "proxy");
    CHECK(c.gamma == 0.5);
    c.search.dampening.c = 0.1 + 0.2;
    const std::string m = manifest_text(c);
    const RunConfig back = build_config(parse_key_values(m, "manifest"));
    CHECK(manifest_text(back) == m);
    CHECK(back.search.dampening.c == c.search.dampening.c);
    CHECK(config_keys().size() == parse_key_values(m, "manifest").size());
}

TEST_CASE("bad configurations") {
    CHECK_THROWS_WITH(build_config({{"nonsense", "1"}}), doctest::Contains("nonsense"));
    CHECK_THROWS_WITH(build_config({{"alpha", "two"}}), doctest::Contains("alpha"));
    CHECK_THROWS_WITH(build_config({{"rule", "dutch"}}), doctest::Contains("dutch"));
    CHECK_THROWS(build_config({{"domain", "llllgg"}, {"integrator", "quadrature"}}).search);
    CHECK_THROWS(parse_key_values("no equals sign", "x"));
}

TEST_CASE("profile files round-trip exactly") {
    const RunConfig c = build_config({{"domain", "llllgg"}});
    const Setting s = make_setting(c);
    std::vector<double> bids;
    const auto g = ControlGrid::even_box(s.domain.bidder(0), 4);
    for (std::size_t p = 0; p < g.points(); ++p) {
        bids.push_back(0.1 * static_cast<double>(p) / 3.0);
        bids.push_back(1.0 / (1.0 + static_cast<double>(p)));
    }
    Profile p = Profile::truthful(s.domain);
    p.assign(s.domain, 0, std::make_shared<const InterpolatedStrategy>(g, 2, bids, Interpolation::Constant));
    const std::string text = profile_to_json(s.domain, p);
    const Profile back = profile_from_json(s.domain, text);
    CHECK(back.strategy(2).raw_bids() == bids);
    CHECK(back.shared(0) == back.shared(3));
    CHECK(back.strategy(4).raw_bids() == p.strategy(4).raw_bids());
    CHECK(profile_to_json(s.domain, back) == text);
}

TEST_CASE("malformed profile files name the record") {
    const Setting s = make_setting(build_config({}));
    std::string text = profile_to_json(s.domain, Profile::truthful(s.domain));
    CHECK_THROWS_AS(profile_from_json(s.domain, "{"), ParseError);
    auto broken = text;
    broken.replace(broken.find("\"bids\""), 6, "\"bidz\"");
    CHECK_THROWS_WITH(profile_from_json(s.domain, broken), doctest::Contains("strategies[0]"));
    const Setting other = make_setting(build_config({{"domain", "llllgg"}}));
    CHECK_THROWS_WITH(profile_from_json(other.domain, text), doctest::Contains("domain"));
}

TEST_CASE("exit codes") {
    EpsilonReport r;
    r.epsilon = 5e-4;
    CHECK(exit_code_for(r, 1e-3, true) == kBelowTarget);
    r.epsilon = 2e-3;
    CHECK(exit_code_for(r, 1e-3, true) == kAboveTarget);
    CHECK(exit_code_for(r, 1e-3, false) == kNotConverged);
}

TEST_CASE("setting factory") {
    Setting s = make_setting(build_config({}));
    CHECK(s.estimator(0).name() == "mc_importance");
    CHECK(s.bid_ceiling == std::vector<double>{2.0, 2.0, 4.0});
    s = make_setting(build_config({{"global_strategic", "true"}}));
    CHECK(s.estimator(0).name() == "mc");
    CHECK(s.estimator(2).name() == "mc");
    s = make_setting(build_config({{"integrator", "quadrature"}}));
    CHECK(s.estimator(1).name() == "quadrature");
    s = make_setting(build_config({{"domain", "llllgg"}}));
    CHECK(s.bid_ceiling == std::vector<double>{2.0, 2.0, 2.0, 2.0, 4.0, 4.0});
}

}
