#include "bne/oracles/synthetic.hpp"

#include <algorithm>
#include <stdexcept>

#include "bne/core/domains.hpp"

namespace bne::oracle {

namespace {

class ClosedFormSet : public SampleSet {
public:
    explicit ClosedFormSet(const BidderSpec& spec) : spec_(spec) {}
    UtilityEstimate evaluate(const Valuation& own, const Bid& bid) const override {
        if (bid.size() != 1 || bid[0] < 0.0) throw std::invalid_argument("synthetic: one nonnegative bid expected");
        UtilityEstimate e;
        e.decomposition.atoms = 1;
        e.decomposition.win_prob[0] = std::min(bid[0], 1.0);
        e.decomposition.expected_payment = bid[0] * e.decomposition.win_prob[0];
        e.utility = e.decomposition.utility(spec_, own);
        return e;
    }
    std::size_t size() const override { return 1; }

private:
    BidderSpec spec_;
};

}  // namespace

Outcome SyntheticFirstPrice::run(std::span<const Bid> bids) const {
    if (bids.size() != 2) throw std::invalid_argument("synthetic mechanism expects two bids");
    Outcome o;
    o.allocation = Allocation::none(2);
    const std::size_t w = bids[0][0] >= bids[1][0] ? 0 : 1;
    o.allocation.assign(w, 0, Bundle::of({0}));
    o.payment[w] = bids[w][0];
    return o;
}

std::shared_ptr<const SampleSet> SyntheticClosedForm::sample(const Profile&, int bidder, const Valuation&,
                                                             std::uint64_t, std::size_t) const {
    if (bidder != 0) throw std::invalid_argument("synthetic closed form covers bidder 0 only");
    return std::make_shared<ClosedFormSet>(spec_);
}

double synthetic_utility(double v, double b) { return (v - b) * std::min(b, 1.0); }

double synthetic_best_response_utility(double v) { return v * v / 4.0; }

Setting make_synthetic_setting() {
    Setting s;
    s.domain = make_synthetic_domain();
    s.mechanism = std::make_shared<SyntheticFirstPrice>();
    s.sampler = std::make_shared<BoxUniformSampler>(s.domain);
    s.estimators = {std::make_shared<SyntheticClosedForm>(s.domain.bidders[0]), nullptr};
    s.bid_ceiling = {2.0, 2.0};
    return s;
}

}  // namespace bne::oracle
