#include "bne/search/dampening.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bne {

double dampening_weight(double loss, const DampeningConfig& cfg) {
    if (!cfg.adaptive) return cfg.fixed;
    const double l = std::max(loss, 0.0);
    return (2.0 / std::numbers::pi) * std::atan(cfg.c * l) * (cfg.w_max - cfg.w_min) + cfg.w_min;
}

InterpolatedStrategy update_strategy(const InterpolatedStrategy& old, const ControlGrid& grid,
                                     std::span<const Bid> best_responses, std::span<const double> losses,
                                     const DampeningConfig& cfg) {
    if (best_responses.size() != grid.points() || losses.size() != grid.points())
        throw std::invalid_argument("update_strategy: one best response per grid point required");
    std::vector<double> bids;
    bids.reserve(grid.points() * old.atoms());
    for (std::size_t p = 0; p < grid.points(); ++p) {
        const Bid prev = old.evaluate(grid.point(p));
        const double w = dampening_weight(losses[p], cfg);
        for (std::size_t k = 0; k < old.atoms(); ++k)
            bids.push_back(std::max(0.0, (1.0 - w) * prev[k] + w * best_responses[p][k]));
    }
    return InterpolatedStrategy(grid, old.atoms(), std::move(bids), Interpolation::Multilinear);
}

}  // namespace bne
