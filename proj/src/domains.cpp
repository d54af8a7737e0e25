#include "bne/core/domains.hpp"

#include <stdexcept>

namespace bne {

namespace {

BidderSpec bidder(int id, std::string name, std::vector<Bundle> boi, Role role, int group, double hi) {
    BidderSpec b;
    b.id = id;
    b.name = std::move(name);
    b.bundles_of_interest = boi;
    b.action_atoms = boi;
    b.role = role;
    b.group = group;
    b.value_lo.assign(boi.size(), 0.0);
    b.value_hi.assign(boi.size(), hi);
    b.finalize();
    return b;
}

}  // namespace

Domain make_llg_domain(const LlgParams& p) {
    if (!(p.alpha > 0.0)) throw std::invalid_argument("llg: alpha must be positive");
    if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) throw std::invalid_argument("llg: gamma must lie in [0, 1]");
    Domain d;
    d.name = "llg";
    d.goods = GoodRegistry::letters(2);
    d.independent = p.gamma == 0.0;
    d.bidders.push_back(bidder(0, "L1", {d.goods.parse("A")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(1, "L2", {d.goods.parse("B")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(2, "G", {d.goods.parse("AB")},
                               p.global_strategic ? Role::Independent : Role::FixedTruthful, -1, 2.0));
    // The two locals are exchangeable, so checking local 1 covers local 2.
    d.verification_bidders = {0};
    if (p.global_strategic) d.verification_bidders.push_back(2);
    return d;
}

Domain make_llllgg_domain() {
    Domain d;
    d.name = "llllgg";
    d.goods = GoodRegistry::letters(8);
    const auto& g = d.goods;
    d.bidders.push_back(bidder(0, "L1", {g.parse("AB"), g.parse("BC")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(1, "L2", {g.parse("CD"), g.parse("DE")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(2, "L3", {g.parse("EF"), g.parse("FG")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(3, "L4", {g.parse("GH"), g.parse("HA")}, Role::SymmetricGroup, 0, 1.0));
    d.bidders.push_back(bidder(4, "G1", {g.parse("ABCD"), g.parse("EFGH")}, Role::SymmetricGroup, 1, 2.0));
    d.bidders.push_back(bidder(5, "G2", {g.parse("CDEF"), g.parse("GHAB")}, Role::SymmetricGroup, 1, 2.0));
    d.verification_bidders = {0, 1, 2, 3, 4, 5};
    return d;
}

Domain make_synthetic_domain() {
    Domain d;
    d.name = "synthetic";
    d.goods = GoodRegistry::letters(1);
    d.bidders.push_back(bidder(0, "S", {d.goods.parse("A")}, Role::Independent, -1, 1.0));
    d.bidders.push_back(bidder(1, "T", {d.goods.parse("A")}, Role::FixedTruthful, -1, 1.0));
    d.verification_bidders = {0};
    return d;
}

}  // namespace bne
