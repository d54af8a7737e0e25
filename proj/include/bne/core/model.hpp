#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bne/core/bundle.hpp"
#include "bne/core/vec.hpp"

namespace bne {

inline constexpr std::size_t kMaxBidders = 8;

enum class Role {
    FixedTruthful,   // bids its values, never updated
    SymmetricGroup,  // shares one strategy with the other members of its group
    Independent,     // learns its own strategy
};

std::string to_string(Role r);
Role role_from_string(const std::string& s);

struct BidderSpec {
    int id = 0;
    std::string name;
    std::vector<Bundle> bundles_of_interest;
    std::vector<Bundle> action_atoms;
    Role role = Role::Independent;
    int group = -1;
    // Axis-aligned box containing the valuation support, one interval per bundle of interest.
    std::vector<double> value_lo;
    std::vector<double> value_hi;
    // For each action atom, the bundle of interest it matches (-1 if none).
    std::vector<int> atom_value_index;

    std::size_t value_dim() const { return bundles_of_interest.size(); }
    std::size_t action_dim() const { return action_atoms.size(); }

    // Checks the invariants and fills atom_value_index.
    void finalize();
    // Largest single-bundle value, used to derive the bid ceiling.
    double max_value() const;
};

// Value of a won bundle: the matching bundle of interest, 0 otherwise.
double value_of(const BidderSpec& spec, const Valuation& v, Bundle won);
// Same, addressed by action atom index (-1 = nothing won).
double atom_value(const BidderSpec& spec, const Valuation& v, int atom);

// Quasi-linear utility.
double utility(const BidderSpec& spec, const Valuation& v, Bundle won, double payment);

// Best-response utility minus the utility of the played strategy.
inline double utility_loss(double best_response_utility, double played_utility) {
    return best_response_utility - played_utility;
}

// Atoms under straightforward bundle bidding: bundles of interest with a value strictly above
// that of every bundle of interest they strictly contain (and above zero).
std::vector<Bundle> straightforward_atoms(const std::vector<Bundle>& bundles_of_interest,
                                          const Valuation& v);

struct Allocation {
    std::size_t bidders = 0;
    std::array<int, kMaxBidders> atom{};        // won atom per bidder, -1 for nothing
    std::array<Bundle, kMaxBidders> bundle{};

    static Allocation none(std::size_t n);
    void assign(std::size_t bidder, int atom_index, Bundle b) {
        atom[bidder] = atom_index;
        bundle[bidder] = b;
    }
    // Pairwise disjoint bundles.
    bool feasible() const;
    bool wins(std::size_t bidder) const { return atom[bidder] >= 0; }
};

struct Outcome {
    Allocation allocation;
    std::array<double, kMaxBidders> payment{};
};

// Goods, bidders and whether their valuations are mutually independent.
struct Domain {
    std::string name;
    GoodRegistry goods;
    std::vector<BidderSpec> bidders;
    bool independent = true;
    // Bidders whose utility loss is checked by verification; the others are covered by symmetry.
    std::vector<int> verification_bidders;

    std::size_t size() const { return bidders.size(); }
    const BidderSpec& bidder(std::size_t i) const { return bidders.at(i); }
    // Lowest-index bidder of each symmetric group plus every independent bidder.
    std::vector<int> update_representatives() const;
    // Bidders sharing the strategy of bidder i (including i).
    std::vector<int> members_like(int i) const;
};

}  // namespace bne
