#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bne/core/model.hpp"

namespace bne::oracle {

// Reference computations by exhaustive enumeration. Slow and independent of the
// production mechanisms; meant for tests at LLG/LLLLGG scale.

// Best feasible assignment over every combination of one atom (or nothing) per bidder.
// Ties go to the lexicographically smallest choice vector, bidder 0 most significant,
// with "nothing" before atom 1 before atom 2.
struct Assignment {
    std::vector<int> atom;  // -1 = nothing
    double welfare = 0.0;
};
Assignment enumerate_assignment(const Domain& d, std::span<const Bid> bids, std::uint32_t coalition);

// VCG payments from enumerated coalition values, in bidder order (0 for losers).
std::vector<double> enumerate_vcg(const Domain& d, std::span<const Bid> bids);

// Core polytope of the winners: sum_{S} p >= rhs[S] for every nonempty winner subset S,
// and 0 <= p <= winning bid.
struct CorePolytope {
    std::vector<int> winners;
    std::vector<double> bid;
    std::vector<double> rhs;  // indexed by subset mask over `winners`
};
CorePolytope enumerate_core(const Domain& d, std::span<const Bid> bids);

// All constraints written as rows a.p >= b (core rows, then p >= 0, then -p >= -bid).
struct Halfspaces {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
};
Halfspaces halfspaces(const CorePolytope& c);

// Vertices of the core polytope, by solving every square subsystem of constraints.
std::vector<std::vector<double>> core_vertices(const CorePolytope& c, double tol = 1e-9);

// Minimum revenue over the core vertices.
double min_core_revenue(const CorePolytope& c);

// Euclidean projection of r onto the minimum-revenue face, by trying the projection onto
// every affine subspace cut out by up to (winners - 1) tight inequalities plus the revenue
// equality and keeping the nearest feasible one.
std::vector<double> project_min_revenue_face(const CorePolytope& c, std::span<const double> r, double tol = 1e-9);

// Rejection sampling of core points from the box [0, bid].
std::vector<std::vector<double>> sample_core(const CorePolytope& c, std::size_t want, std::mt19937_64& rng,
                                             std::size_t max_tries = 1000000);

// Brute-force VCG-nearest payments in bidder order.
std::vector<double> vcg_nearest(const Domain& d, std::span<const Bid> bids);

}  // namespace bne::oracle
