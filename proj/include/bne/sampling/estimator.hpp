#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "bne/core/model.hpp"
#include "bne/mechanisms/llg.hpp"
#include "bne/mechanisms/mechanism.hpp"
#include "bne/sampling/stream.hpp"
#include "bne/sampling/value_sampler.hpp"
#include "bne/strategies/strategy.hpp"

namespace bne {

// Expected utility split into per-atom win probabilities and the expected payment, so that
// utility(v) = sum_a v(atom a) * win_prob[a] - expected_payment for any own value v.
struct UtilityDecomposition {
    std::size_t atoms = 0;
    std::array<double, kMaxAtoms> win_prob{};
    double expected_payment = 0.0;

    double empty_prob() const;
    double utility(const BidderSpec& spec, const Valuation& v) const;
};

struct UtilityEstimate {
    double utility = 0.0;
    UtilityDecomposition decomposition;
};

// Opponent draws for one (bidder, own value, stream), reusable across own bids.
class SampleSet {
public:
    virtual ~SampleSet() = default;
    virtual UtilityEstimate evaluate(const Valuation& own, const Bid& bid) const = 0;
    virtual std::size_t size() const = 0;
};

class UtilityEstimator {
public:
    virtual ~UtilityEstimator() = default;
    virtual std::shared_ptr<const SampleSet> sample(const Profile& profile, int bidder, const Valuation& own,
                                                    std::uint64_t key, std::size_t n) const = 0;
    // True when sample sets do not depend on the own value and may be shared across values.
    virtual bool own_value_independent() const = 0;
    virtual std::string name() const = 0;
};

// Tally-based sample set shared by the Monte Carlo and quadrature estimators.
class TallySampleSet : public SampleSet {
public:
    TallySampleSet(const BidderSpec& spec, std::unique_ptr<BidderResponse> response, std::vector<double> weights,
                   std::size_t n, std::shared_ptr<const BidTable> table);
    UtilityEstimate evaluate(const Valuation& own, const Bid& bid) const override;
    std::size_t size() const override { return n_; }

private:
    BidderSpec spec_;
    std::shared_ptr<const BidTable> table_;
    std::unique_ptr<BidderResponse> response_;
    std::vector<double> weights_;
    std::size_t n_;
};

// Plain (quasi-)Monte Carlo integration over the opponents' conditional distribution.
class MonteCarloEstimator : public UtilityEstimator {
public:
    MonteCarloEstimator(Domain domain, std::shared_ptr<const ValueSampler> sampler,
                        std::shared_ptr<const Mechanism> mechanism, StreamKind kind);

    std::shared_ptr<const SampleSet> sample(const Profile& profile, int bidder, const Valuation& own,
                                            std::uint64_t key, std::size_t n) const override;
    bool own_value_independent() const override { return sampler_->independent(); }
    std::string name() const override { return "mc"; }

private:
    Domain domain_;
    std::shared_ptr<const ValueSampler> sampler_;
    std::shared_ptr<const Mechanism> mechanism_;
    StreamKind kind_;
};

// Truncated draw of the truthful global's value onto the locals' winning region.
struct LlgImportanceSampler {
    explicit LlgImportanceSampler(std::shared_ptr<const LlgSampler> base) : base(std::move(base)) {}

    struct Draw {
        double partner_value;
        double global_value;
        double weight;
    };
    // u0 drives the partner's value, u1 the global's value on the truncated support.
    Draw sample(double own_value, double own_bid, const InterpolatedStrategy& partner, double u0, double u1) const;
    // Truncation point and weight for given bids: v3 ~ U[0, t], weight t / 2.
    static std::pair<double, double> truncation(double own_bid, double partner_bid);

    std::shared_ptr<const LlgSampler> base;
};

// Importance-sampled LLG estimator for a local bidder when the global bids truthfully.
class LlgImportanceEstimator : public UtilityEstimator {
public:
    LlgImportanceEstimator(Domain domain, std::shared_ptr<const LlgSampler> sampler, LlgRule rule, StreamKind kind);

    std::shared_ptr<const SampleSet> sample(const Profile& profile, int bidder, const Valuation& own,
                                            std::uint64_t key, std::size_t n) const override;
    bool own_value_independent() const override { return sampler_->independent(); }
    std::string name() const override { return "mc_importance"; }

private:
    Domain domain_;
    std::shared_ptr<const LlgSampler> sampler_;
    LlgRule rule_;
    StreamKind kind_;
};

// Midpoint tensor-product quadrature over the LLG opponents' values (grid x grid nodes,
// plus grid nodes for the perfectly correlated component).
class LlgQuadratureEstimator : public UtilityEstimator {
public:
    LlgQuadratureEstimator(Domain domain, std::shared_ptr<const LlgSampler> sampler,
                           std::shared_ptr<const Mechanism> mechanism, std::size_t grid);

    std::shared_ptr<const SampleSet> sample(const Profile& profile, int bidder, const Valuation& own,
                                            std::uint64_t key, std::size_t n) const override;
    bool own_value_independent() const override { return sampler_->independent(); }
    std::string name() const override { return "quadrature"; }

private:
    Domain domain_;
    std::shared_ptr<const LlgSampler> sampler_;
    std::shared_ptr<const Mechanism> mechanism_;
    std::size_t grid_;
};

UtilityEstimate estimate_expected_utility(const UtilityEstimator& est, const Profile& profile, int bidder,
                                          const Valuation& own, const Bid& bid, std::uint64_t key, std::size_t n);

// Difference of two bids' utilities on one shared sample set.
double common_random_compare(const SampleSet& set, const Valuation& own, const Bid& a, const Bid& b);

}  // namespace bne
