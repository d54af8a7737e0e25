#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bne/sampling/setting.hpp"
#include "bne/search/pattern_search.hpp"
#include "bne/search/search.hpp"
#include "bne/strategies/strategy.hpp"

namespace bne {

enum class VerificationMethod { Auto, TheoremBound, GridEstimate };
enum class StreamPolicy { Shared, PerPoint };

std::string to_string(VerificationMethod m);
VerificationMethod verification_method_from_string(const std::string& s);
std::string to_string(StreamPolicy p);
StreamPolicy stream_policy_from_string(const std::string& s);

// Raised when the theorem bound is requested for a setting where it does not hold.
class BoundNotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VerificationConfig {
    std::size_t grid_points = 8193;  // per value dimension
    std::size_t samples = 20000;
    PatternSearchConfig pattern{3, 0.1, 20};
    Optimizer optimizer = Optimizer::Pattern;
    std::uint64_t seed = 7;
    StreamPolicy streams = StreamPolicy::Shared;
    VerificationMethod method = VerificationMethod::Auto;
    std::vector<int> bidders;  // empty: the domain's verification bidders
    std::size_t workers = 1;
};

struct WorstTerm {
    int bidder = -1;
    Valuation cell_lower;
    Valuation vertex;
    double loss = 0.0;
};

struct EpsilonReport {
    std::string method;                 // "theorem_bound" or "grid_estimate"
    double epsilon = 0.0;               // the bound, or the estimate when no bound applies
    std::optional<double> estimate;     // grid estimate, reported alongside a bound
    std::vector<WorstTerm> worst;       // per verified bidder, for `epsilon`
    std::vector<WorstTerm> worst_estimate;
    std::map<std::string, std::string> parameters;
};

// Best response and played utility at one grid point.
struct VertexResult {
    Valuation value;
    Bid played;
    Bid best_bid;
    double best_utility = 0.0;
    UtilityEstimate start;  // utility of the played bid, with its decomposition
};

// Best responses of `bidder` at every point of `grid`; `profile` supplies both the played bid
// (its strategy for `bidder`) and the opponents.
std::vector<VertexResult> evaluate_vertices(const Setting& s, const Profile& profile, int bidder,
                                            const ControlGrid& grid, const VerificationConfig& cfg);

// Max over cells and cell vertices of BR(w) - u(w, s*(cell lower corner)).
WorstTerm bound_from_vertices(const BidderSpec& spec, const ControlGrid& grid, const std::vector<VertexResult>& vr);
// Max over grid points of BR(w) - u(w, s*(w)).
WorstTerm estimate_from_vertices(const ControlGrid& grid, const std::vector<VertexResult>& vr);

// Verification grids: even grids for strategic bidders; fixed-truthful bidders keep exact play.
Profile piecewise_constant_profile(const Setting& s, const Profile& candidate, std::size_t grid_points);

EpsilonReport theorem_bound(const Setting& s, const Profile& pwc, const VerificationConfig& cfg);
EpsilonReport grid_estimate(const Setting& s, const Profile& pwc, const VerificationConfig& cfg);

// Converts the candidate and dispatches on whether the setting admits the bound.
EpsilonReport verify(const Setting& s, const Profile& candidate, const VerificationConfig& cfg);

struct SweepRow {
    int bidder = 0;
    std::size_t level = 0;   // grid of 2^level + 1 points
    std::size_t points = 0;
    double bound = 0.0;
    double estimate = 0.0;
};

// Bound and estimate of 1-D bidders for nested grids of 2^k + 1 points, k = 1..max_level.
// Opponents play the finest conversion; best responses are shared across levels.
std::vector<SweepRow> bound_estimate_sweep(const Setting& s, const Profile& candidate, std::size_t max_level,
                                           const VerificationConfig& cfg);

}  // namespace bne
