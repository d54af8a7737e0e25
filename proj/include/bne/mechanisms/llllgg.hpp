#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bne/mechanisms/core_payments.hpp"
#include "bne/mechanisms/mechanism.hpp"

namespace bne {

enum class LlllggRule { FirstPrice, VcgNearest };

std::string to_string(LlllggRule r);
LlllggRule llllgg_rule_from_string(const std::string& s);

// Feasible XOR assignments of the six LLLLGG bidders, enumerated once.
// Digit j of an assignment is 0 (nothing) or 1 + atom index for bidder j; assignments are
// stored in increasing lexicographic order with bidder 0 most significant.
class LlllggAssignments {
public:
    static const LlllggAssignments& instance();

    struct Entry {
        std::array<std::uint8_t, 6> digit;
        std::uint8_t participants;  // bitmask of bidders that win something
        std::uint32_t code;
    };

    const std::vector<Entry>& entries() const { return entries_; }

private:
    LlllggAssignments();
    std::vector<Entry> entries_;
};

// Welfare-maximizing allocation; exact ties go to the lexicographically smallest assignment.
Allocation llllgg_winner_determination(const Domain& d, std::span<const Bid> bids);

// Maximum declared welfare of every coalition of the six bidders (indexed by bitmask).
std::array<double, 64> llllgg_coalition_values(std::span<const Bid> bids);

std::array<double, 6> llllgg_payments(LlllggRule rule, const Domain& d, std::span<const Bid> bids,
                                      const Allocation& alloc);

class LlllggMechanism : public Mechanism {
public:
    explicit LlllggMechanism(LlllggRule rule);
    LlllggRule rule() const { return rule_; }

    std::string name() const override { return "llllgg." + to_string(rule_); }
    std::size_t bidders() const override { return 6; }
    Outcome run(std::span<const Bid> bids) const override;
    std::unique_ptr<BidderResponse> prepare(int bidder, std::shared_ptr<const BidTable> others) const override;

private:
    LlllggRule rule_;
    Domain domain_;
};

}  // namespace bne
