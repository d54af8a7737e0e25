#include "bne/strategies/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bne {

ControlGrid::ControlGrid(std::vector<std::vector<double>> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > kMaxAtoms) throw std::invalid_argument("ControlGrid: bad dimension");
    points_ = 1;
    for (const auto& a : axes_) {
        if (a.size() < 2) throw std::invalid_argument("ControlGrid: an axis needs at least two points");
        for (std::size_t k = 1; k < a.size(); ++k)
            if (!(a[k] > a[k - 1])) throw std::invalid_argument("ControlGrid: coordinates must increase strictly");
        points_ *= a.size();
        // Evenly spaced axes get O(1) lookup; `locate` corrects any rounding.
        double h = (a.back() - a.front()) / static_cast<double>(a.size() - 1);
        bool even = true;
        for (std::size_t k = 0; k < a.size() && even; ++k)
            even = std::abs(a[k] - (a.front() + static_cast<double>(k) * h)) <= 1e-12 * (1.0 + std::abs(a[k]));
        step_.push_back(even ? h : 0.0);
    }
}

ControlGrid ControlGrid::even(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw std::invalid_argument("ControlGrid::even: need n >= 2 and hi > lo");
    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    a.back() = hi;
    return ControlGrid({a});
}

ControlGrid ControlGrid::even_box(const BidderSpec& spec, std::size_t n) {
    std::vector<std::vector<double>> axes;
    for (std::size_t d = 0; d < spec.value_dim(); ++d)
        axes.push_back(even(spec.value_lo[d], spec.value_hi[d], n).axis(0));
    return ControlGrid(std::move(axes));
}

Valuation ControlGrid::point(std::size_t flat) const {
    Valuation v(dims());
    for (std::size_t d = dims(); d-- > 0;) {
        std::size_t n = axes_[d].size();
        v[d] = axes_[d][flat % n];
        flat /= n;
    }
    return v;
}

std::size_t ControlGrid::flatten(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < dims(); ++d) flat = flat * axes_[d].size() + idx[d];
    return flat;
}

void ControlGrid::unflatten(std::size_t flat, std::span<std::size_t> idx) const {
    for (std::size_t d = dims(); d-- > 0;) {
        std::size_t n = axes_[d].size();
        idx[d] = flat % n;
        flat /= n;
    }
}

std::size_t ControlGrid::locate(std::size_t d, double x) const {
    const auto& a = axes_[d];
    const std::size_t n = a.size();
    if (x <= a.front()) return 0;
    if (x >= a.back()) return n - 1;
    std::size_t j;
    if (step_[d] > 0.0) {
        double q = std::floor((x - a.front()) / step_[d]);
        j = q < 0.0 ? 0 : std::min(static_cast<std::size_t>(q), n - 1);
        while (j + 1 < n && a[j + 1] <= x) ++j;
        while (j > 0 && a[j] > x) --j;
    } else {
        j = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin()) - 1;
    }
    return j;
}

void ControlGrid::check_covers(const Valuation& v) const {
    if (v.size() != dims()) throw CoverageError("strategy evaluated with a valuation of the wrong dimension");
    for (std::size_t d = 0; d < dims(); ++d) {
        double slack = 1e-9 * (hi(d) - lo(d));
        if (!(v[d] >= lo(d) - slack && v[d] <= hi(d) + slack))
            throw CoverageError("valuation " + std::to_string(v[d]) + " outside strategy grid [" +
                                std::to_string(lo(d)) + ", " + std::to_string(hi(d)) + "]");
    }
}

}  // namespace bne
