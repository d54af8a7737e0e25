#include "bne/strategies/strategy.hpp"

#include <array>
#include <map>

namespace bne {

const char* to_string(Interpolation m) {
    return m == Interpolation::Multilinear ? "multilinear" : "constant";
}

Interpolation interpolation_from_string(const std::string& s) {
    if (s == "multilinear") return Interpolation::Multilinear;
    if (s == "constant") return Interpolation::Constant;
    throw std::invalid_argument("unknown interpolation mode '" + s + "'");
}

InterpolatedStrategy::InterpolatedStrategy(ControlGrid grid, std::size_t atoms, std::vector<double> bids,
                                           Interpolation mode)
    : grid_(std::move(grid)), atoms_(atoms), bids_(std::move(bids)), mode_(mode) {
    if (atoms_ == 0 || atoms_ > kMaxAtoms) throw std::invalid_argument("InterpolatedStrategy: bad atom count");
    if (bids_.size() != grid_.points() * atoms_)
        throw std::invalid_argument("InterpolatedStrategy: bid table does not match grid");
    for (double b : bids_)
        if (!(b >= 0.0)) throw std::invalid_argument("InterpolatedStrategy: bids must be non-negative");
}

InterpolatedStrategy InterpolatedStrategy::truthful(const BidderSpec& spec) {
    std::vector<std::vector<double>> axes;
    for (std::size_t d = 0; d < spec.value_dim(); ++d) axes.push_back({spec.value_lo[d], spec.value_hi[d]});
    ControlGrid grid(std::move(axes));
    std::vector<double> bids;
    for (std::size_t p = 0; p < grid.points(); ++p) {
        Valuation v = grid.point(p);
        for (std::size_t a = 0; a < spec.action_dim(); ++a) bids.push_back(atom_value(spec, v, static_cast<int>(a)));
    }
    return InterpolatedStrategy(std::move(grid), spec.action_dim(), std::move(bids), Interpolation::Multilinear);
}

Bid InterpolatedStrategy::bid_at(std::size_t point) const {
    return Bid::from(std::span<const double>(bids_.data() + point * atoms_, atoms_));
}

Bid InterpolatedStrategy::evaluate(const Valuation& v) const {
    grid_.check_covers(v);
    const std::size_t dims = grid_.dims();
    std::array<std::size_t, kMaxAtoms> idx{};
    if (mode_ == Interpolation::Constant) {
        for (std::size_t d = 0; d < dims; ++d) idx[d] = grid_.locate(d, v[d]);
        return bid_at(grid_.flatten({idx.data(), dims}));
    }
    std::array<double, kMaxAtoms> t{};
    for (std::size_t d = 0; d < dims; ++d) {
        const auto& a = grid_.axis(d);
        std::size_t j = grid_.locate(d, v[d]);
        if (j + 1 >= a.size()) j = a.size() - 2;
        idx[d] = j;
        double x = std::min(std::max(v[d], a[j]), a[j + 1]);
        t[d] = (x - a[j]) / (a[j + 1] - a[j]);
    }
    Bid out(atoms_, 0.0);
    if (dims == 1) {
        const double* lo = bids_.data() + idx[0] * atoms_;
        const double* hi = lo + atoms_;
        for (std::size_t k = 0; k < atoms_; ++k) out[k] = (1.0 - t[0]) * lo[k] + t[0] * hi[k];
        return out;
    }
    std::array<std::size_t, kMaxAtoms> corner{};
    for (std::size_t mask = 0; mask < (std::size_t{1} << dims); ++mask) {
        double w = 1.0;
        for (std::size_t d = 0; d < dims; ++d) {
            bool up = (mask >> d) & 1u;
            corner[d] = idx[d] + (up ? 1 : 0);
            w *= up ? t[d] : 1.0 - t[d];
        }
        if (w == 0.0) continue;
        const double* b = bids_.data() + grid_.flatten({corner.data(), dims}) * atoms_;
        for (std::size_t k = 0; k < atoms_; ++k) out[k] += w * b[k];
    }
    return out;
}

InterpolatedStrategy InterpolatedStrategy::resample(const ControlGrid& target, Interpolation mode) const {
    std::vector<double> bids;
    bids.reserve(target.points() * atoms_);
    for (std::size_t p = 0; p < target.points(); ++p) {
        Bid b = evaluate(target.point(p));
        bids.insert(bids.end(), b.begin(), b.end());
    }
    return InterpolatedStrategy(target, atoms_, std::move(bids), mode);
}

InterpolatedStrategy InterpolatedStrategy::to_piecewise_constant(const ControlGrid& target) const {
    return resample(target, Interpolation::Constant);
}

Profile::Profile(std::vector<StrategyPtr> strategies) : strategies_(std::move(strategies)) {
    for (const auto& s : strategies_)
        if (!s) throw std::invalid_argument("Profile: missing strategy");
}

Profile Profile::truthful(const Domain& d) {
    std::vector<StrategyPtr> s(d.size());
    std::map<int, StrategyPtr> by_group;
    for (const auto& b : d.bidders) {
        if (b.role == Role::SymmetricGroup && by_group.count(b.group)) {
            s[static_cast<std::size_t>(b.id)] = by_group[b.group];
            continue;
        }
        auto p = std::make_shared<const InterpolatedStrategy>(InterpolatedStrategy::truthful(b));
        if (b.role == Role::SymmetricGroup) by_group[b.group] = p;
        s[static_cast<std::size_t>(b.id)] = p;
    }
    return Profile(std::move(s));
}

void Profile::assign(const Domain& d, int i, StrategyPtr s) {
    for (int j : d.members_like(i)) strategies_.at(static_cast<std::size_t>(j)) = s;
}

Profile Profile::to_piecewise_constant(const Domain& d, const std::vector<ControlGrid>& grids) const {
    if (grids.size() != size() || d.size() != size()) throw std::invalid_argument("Profile: grid count mismatch");
    std::vector<StrategyPtr> out(size());
    std::map<const InterpolatedStrategy*, StrategyPtr> done;
    for (std::size_t i = 0; i < size(); ++i) {
        const InterpolatedStrategy* key = strategies_[i].get();
        auto it = done.find(key);
        if (it != done.end() && it->second->grid() == grids[i]) {
            out[i] = it->second;
            continue;
        }
        auto c = std::make_shared<const InterpolatedStrategy>(strategies_[i]->to_piecewise_constant(grids[i]));
        done[key] = c;
        out[i] = c;
    }
    return Profile(std::move(out));
}

}  // namespace bne
