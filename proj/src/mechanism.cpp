#include "bne/mechanisms/mechanism.hpp"

#include <vector>

namespace bne {

std::unique_ptr<BidderResponse> Mechanism::prepare(int bidder, std::shared_ptr<const BidTable> others) const {
    return std::make_unique<FullRunResponse>(*this, bidder, std::move(others));
}

void FullRunResponse::tally(const Bid& own, std::span<const double> weights, OutcomeTally& out) const {
    const BidTable& t = *others_;
    std::vector<Bid> row(t.bidders());
    const auto i = static_cast<std::size_t>(bidder_);
    for (std::size_t k = 0; k < t.samples(); ++k) {
        auto r = t.row(k);
        std::copy(r.begin(), r.end(), row.begin());
        row[i] = own;
        Outcome o = mech_.run(row);
        double w = weights.empty() ? 1.0 : weights[k];
        int a = o.allocation.atom[i];
        if (a >= 0) out.win[static_cast<std::size_t>(a)] += w;
        out.payment += w * o.payment[i];
    }
}

}  // namespace bne
