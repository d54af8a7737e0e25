#pragma once

#include <span>

#include "bne/strategies/strategy.hpp"

namespace bne {

struct DampeningConfig {
    bool adaptive = true;
    double w_min = 0.2;
    double w_max = 0.7;
    double c = 500.0;     // slope; 1 / (2 * target epsilon) by default
    double fixed = 0.5;   // weight used when not adaptive
};

// w = (2/pi) atan(c * loss) (w_max - w_min) + w_min, or the fixed weight.
double dampening_weight(double loss, const DampeningConfig& cfg);

// New strategy on `grid`: at every point, (1 - w) * old(point) + w * best_response, with w from the point's loss.
InterpolatedStrategy update_strategy(const InterpolatedStrategy& old, const ControlGrid& grid,
                                     std::span<const Bid> best_responses, std::span<const double> losses,
                                     const DampeningConfig& cfg);

}  // namespace bne
