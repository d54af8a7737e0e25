#include "bne/mechanisms/llg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bne {

std::string to_string(LlgRule r) {
    switch (r) {
        case LlgRule::FirstPrice: return "first_price";
        case LlgRule::Vcg: return "vcg";
        case LlgRule::VcgNearest: return "vcg_nearest";
        case LlgRule::NearestBid: return "nearest_bid";
        case LlgRule::Proxy: return "proxy";
        case LlgRule::Proportional: return "proportional";
    }
    return "?";
}

LlgRule llg_rule_from_string(const std::string& s) {
    for (LlgRule r : {LlgRule::FirstPrice, LlgRule::Vcg, LlgRule::VcgNearest, LlgRule::NearestBid, LlgRule::Proxy,
                      LlgRule::Proportional})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown LLG payment rule '" + s + "'");
}

bool is_core_selecting(LlgRule r) {
    return r == LlgRule::VcgNearest || r == LlgRule::NearestBid || r == LlgRule::Proxy || r == LlgRule::Proportional;
}

Allocation llg_allocate(double b1, double b2, double b3) {
    Allocation a = Allocation::none(3);
    if (b1 + b2 >= b3) {
        a.assign(0, 0, Bundle::of({0}));
        a.assign(1, 0, Bundle::of({1}));
    } else {
        a.assign(2, 0, Bundle::of({0, 1}));
    }
    return a;
}

double llg_local_payment(LlgRule rule, double own, double other, double b3) {
    // Minimum-revenue core payments of this local lie in [lo, hi], the other pays b3 minus that.
    const double lo = std::max(0.0, b3 - other);
    const double hi = std::min(own, b3);
    switch (rule) {
        case LlgRule::FirstPrice: return own;
        case LlgRule::Vcg: return lo;
        case LlgRule::VcgNearest: {
            const double vcg_other = std::max(0.0, b3 - own);
            return std::clamp(lo + 0.5 * (b3 - lo - vcg_other), lo, hi);
        }
        case LlgRule::NearestBid: return std::clamp(0.5 * (own - other + b3), lo, hi);
        case LlgRule::Proxy: return std::clamp(0.5 * b3, lo, hi);
        case LlgRule::Proportional: return own + other > 0.0 ? b3 * own / (own + other) : 0.0;
    }
    return 0.0;
}

std::array<double, 3> llg_payments(LlgRule rule, double b1, double b2, double b3, const Allocation& alloc) {
    const bool locals = alloc.wins(0) && alloc.wins(1) && !alloc.wins(2);
    const bool global = alloc.wins(2) && !alloc.wins(0) && !alloc.wins(1);
    if (!locals && !global) throw std::invalid_argument("llg_payments: allocation is not an LLG outcome");
    if (locals != (b1 + b2 >= b3)) throw std::invalid_argument("llg_payments: allocation inconsistent with bids");
    if (locals) return {llg_local_payment(rule, b1, b2, b3), llg_local_payment(rule, b2, b1, b3), 0.0};
    return {0.0, 0.0, rule == LlgRule::FirstPrice ? b3 : b1 + b2};
}

Outcome LlgMechanism::run(std::span<const Bid> bids) const {
    if (bids.size() != 3) throw std::invalid_argument("LLG expects three bids");
    const double b1 = bids[0][0], b2 = bids[1][0], b3 = bids[2][0];
    Outcome o;
    o.allocation = llg_allocate(b1, b2, b3);
    auto p = llg_payments(rule_, b1, b2, b3, o.allocation);
    std::copy(p.begin(), p.end(), o.payment.begin());
    return o;
}

namespace {

class LlgResponse : public BidderResponse {
public:
    LlgResponse(LlgRule rule, int bidder, std::shared_ptr<const BidTable> others)
        : rule_(rule), bidder_(bidder), others_(std::move(others)) {}

    void tally(const Bid& own, std::span<const double> weights, OutcomeTally& out) const override {
        const BidTable& t = *others_;
        const double b = own[0];
        double win = 0.0, pay = 0.0;
        if (bidder_ == 2) {
            for (std::size_t k = 0; k < t.samples(); ++k) {
                const double b1 = t.at(k, 0)[0], b2 = t.at(k, 1)[0];
                if (b1 + b2 >= b) continue;
                const double w = weights.empty() ? 1.0 : weights[k];
                win += w;
                pay += w * (rule_ == LlgRule::FirstPrice ? b : b1 + b2);
            }
        } else {
            const std::size_t o = bidder_ == 0 ? 1 : 0;
            for (std::size_t k = 0; k < t.samples(); ++k) {
                const double other = t.at(k, o)[0], b3 = t.at(k, 2)[0];
                if (b + other < b3) continue;
                const double w = weights.empty() ? 1.0 : weights[k];
                win += w;
                pay += w * llg_local_payment(rule_, b, other, b3);
            }
        }
        out.win[0] += win;
        out.payment += pay;
    }

private:
    LlgRule rule_;
    int bidder_;
    std::shared_ptr<const BidTable> others_;
};

}  // namespace

std::unique_ptr<BidderResponse> LlgMechanism::prepare(int bidder, std::shared_ptr<const BidTable> others) const {
    if (bidder < 0 || bidder > 2) throw std::out_of_range("LLG bidder index");
    return std::make_unique<LlgResponse>(rule_, bidder, std::move(others));
}

}  // namespace bne
