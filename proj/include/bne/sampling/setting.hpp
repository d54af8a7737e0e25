#pragma once

#include <memory>
#include <vector>

#include "bne/core/model.hpp"
#include "bne/mechanisms/mechanism.hpp"
#include "bne/sampling/estimator.hpp"
#include "bne/sampling/value_sampler.hpp"

namespace bne {

// A game instance: bidders, auction, valuation law and the utility estimator used per bidder.
struct Setting {
    Domain domain;
    std::shared_ptr<const Mechanism> mechanism;
    std::shared_ptr<const ValueSampler> sampler;
    std::vector<std::shared_ptr<const UtilityEstimator>> estimators;  // null for fixed-truthful bidders
    std::vector<double> bid_ceiling;                                   // per bidder

    const UtilityEstimator& estimator(int i) const;
};

}  // namespace bne
