#include "bne/sampling/setting.hpp"

#include <stdexcept>

namespace bne {

const UtilityEstimator& Setting::estimator(int i) const {
    const auto& e = estimators.at(static_cast<std::size_t>(i));
    if (!e) throw std::logic_error("no estimator for bidder " + std::to_string(i));
    return *e;
}

}  // namespace bne
