#pragma once

#include "bne/sampling/setting.hpp"

namespace bne::oracle {

// Single good, first price, highest bid wins (ties to bidder 0).
class SyntheticFirstPrice : public Mechanism {
public:
    std::string name() const override { return "synthetic.first_price"; }
    std::size_t bidders() const override { return 2; }
    Outcome run(std::span<const Bid> bids) const override;
};

// Exact expected utility of bidder 0 against a truthful opponent with value U[0, 1]:
// win probability min(b, 1), payment b * min(b, 1).
class SyntheticClosedForm : public UtilityEstimator {
public:
    explicit SyntheticClosedForm(BidderSpec spec) : spec_(std::move(spec)) {}
    std::shared_ptr<const SampleSet> sample(const Profile& profile, int bidder, const Valuation& own,
                                            std::uint64_t key, std::size_t n) const override;
    bool own_value_independent() const override { return true; }
    std::string name() const override { return "closed_form"; }

private:
    BidderSpec spec_;
};

double synthetic_utility(double v, double b);
// v^2 / 4, attained at b = v / 2.
double synthetic_best_response_utility(double v);

Setting make_synthetic_setting();

}  // namespace bne::oracle
