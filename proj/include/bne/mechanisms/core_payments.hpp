#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace bne {

// Core constraints restricted to the winners: for every nonempty subset S of winners,
// sum_{i in S} p_i >= rhs[S], together with 0 <= p_i <= bid_i.
struct CoreConstraints {
    std::size_t winners = 0;
    std::vector<double> winning_bid;   // per winner
    std::vector<double> rhs;           // indexed by subset mask, rhs[0] unused
};

// Builds the winner-restricted constraints from coalition values W(C) over n bidders.
// rhs[S] = W(N \ S) - sum_{j in winners \ S} bid_j.
CoreConstraints make_core_constraints(std::span<const double> coalition_values, std::size_t n,
                                      std::span<const int> winner_ids, std::span<const double> winning_bid);

// VCG payment of every winner: W(N \ {i}) - (W(N) - bid_i).
std::vector<double> vcg_payments(std::span<const double> coalition_values, std::size_t n,
                                 std::span<const int> winner_ids, std::span<const double> winning_bid);

// Minimum total payment over the core.
double minimum_core_revenue(const CoreConstraints& c);

// The minimum-revenue core point closest to `reference` in Euclidean distance.
// Throws std::runtime_error if the solvers fail.
std::vector<double> nearest_core_payments(const CoreConstraints& c, std::span<const double> reference);

// Largest constraint violation of p (0 if p lies in the core).
double core_violation(const CoreConstraints& c, std::span<const double> p);

}  // namespace bne
