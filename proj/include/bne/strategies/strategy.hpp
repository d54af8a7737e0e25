#pragma once

#include <memory>
#include <vector>

#include "bne/core/model.hpp"
#include "bne/strategies/grid.hpp"

namespace bne {

enum class Interpolation { Multilinear, Constant };

const char* to_string(Interpolation m);
Interpolation interpolation_from_string(const std::string& s);

// Bid function defined by bid vectors at the points of a control grid.
// Multilinear mode interpolates inside grid cells; constant mode returns the bid
// at the cell's lower corner.
class InterpolatedStrategy {
public:
    InterpolatedStrategy(ControlGrid grid, std::size_t atoms, std::vector<double> bids, Interpolation mode);

    static InterpolatedStrategy truthful(const BidderSpec& spec);

    const ControlGrid& grid() const { return grid_; }
    std::size_t atoms() const { return atoms_; }
    Interpolation mode() const { return mode_; }
    const std::vector<double>& raw_bids() const { return bids_; }

    Bid bid_at(std::size_t point) const;
    Bid evaluate(const Valuation& v) const;

    // Piecewise-constant strategy on `target` that agrees with this one at every target point.
    InterpolatedStrategy to_piecewise_constant(const ControlGrid& target) const;
    // Same mode, evaluated at the points of `target`.
    InterpolatedStrategy resample(const ControlGrid& target, Interpolation mode) const;

private:
    ControlGrid grid_;
    std::size_t atoms_;
    std::vector<double> bids_;
    Interpolation mode_;
};

using StrategyPtr = std::shared_ptr<const InterpolatedStrategy>;

// One strategy per bidder; members of a symmetric group share the same object.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::vector<StrategyPtr> strategies);

    static Profile truthful(const Domain& d);

    std::size_t size() const { return strategies_.size(); }
    const InterpolatedStrategy& strategy(std::size_t i) const { return *strategies_.at(i); }
    const StrategyPtr& shared(std::size_t i) const { return strategies_.at(i); }
    Bid bid(std::size_t i, const Valuation& v) const { return strategies_[i]->evaluate(v); }

    // Installs s for bidder i and every bidder sharing its strategy.
    void assign(const Domain& d, int i, StrategyPtr s);

    // Converts every strategy to a piecewise-constant one on the given per-bidder grid.
    Profile to_piecewise_constant(const Domain& d, const std::vector<ControlGrid>& grids) const;

private:
    std::vector<StrategyPtr> strategies_;
};

}  // namespace bne
