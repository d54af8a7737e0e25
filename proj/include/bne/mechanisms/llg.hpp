#pragma once

#include <array>
#include <string>

#include "bne/mechanisms/mechanism.hpp"

namespace bne {

enum class LlgRule { FirstPrice, Vcg, VcgNearest, NearestBid, Proxy, Proportional };

std::string to_string(LlgRule r);
LlgRule llg_rule_from_string(const std::string& s);
bool is_core_selecting(LlgRule r);

// Locals (bidders 0, 1) win iff b1 + b2 >= b3; ties go to the locals.
Allocation llg_allocate(double b1, double b2, double b3);

// Payments of bidders (L1, L2, G) for the given allocation.
std::array<double, 3> llg_payments(LlgRule rule, double b1, double b2, double b3, const Allocation& alloc);

// Payment of local `i` (0 or 1) when the locals win; `own` is its bid, `other` the other local's.
double llg_local_payment(LlgRule rule, double own, double other, double b3);

class LlgMechanism : public Mechanism {
public:
    explicit LlgMechanism(LlgRule rule) : rule_(rule) {}
    LlgRule rule() const { return rule_; }

    std::string name() const override { return "llg." + to_string(rule_); }
    std::size_t bidders() const override { return 3; }
    Outcome run(std::span<const Bid> bids) const override;
    std::unique_ptr<BidderResponse> prepare(int bidder, std::shared_ptr<const BidTable> others) const override;

private:
    LlgRule rule_;
};

}  // namespace bne
