#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bne/core/model.hpp"

namespace bne {

// Raised when a strategy is evaluated outside the box its grid covers.
class CoverageError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tensor-product grid over a valuation box. Points are ordered row-major
// (first dimension slowest).
class ControlGrid {
public:
    ControlGrid() = default;
    explicit ControlGrid(std::vector<std::vector<double>> axes);

    static ControlGrid even(double lo, double hi, std::size_t n);
    // n evenly spaced points per dimension over the bidder's value box.
    static ControlGrid even_box(const BidderSpec& spec, std::size_t n);

    std::size_t dims() const { return axes_.size(); }
    std::size_t points() const { return points_; }
    const std::vector<double>& axis(std::size_t d) const { return axes_[d]; }
    std::size_t axis_size(std::size_t d) const { return axes_[d].size(); }
    double lo(std::size_t d) const { return axes_[d].front(); }
    double hi(std::size_t d) const { return axes_[d].back(); }

    Valuation point(std::size_t flat) const;
    std::size_t flatten(std::span<const std::size_t> idx) const;
    void unflatten(std::size_t flat, std::span<std::size_t> idx) const;

    // Index of the largest coordinate not exceeding x (0 below the grid).
    std::size_t locate(std::size_t d, double x) const;
    // Throws CoverageError unless v lies in the grid box (up to rounding slack).
    void check_covers(const Valuation& v) const;

    bool operator==(const ControlGrid& o) const { return axes_ == o.axes_; }

private:
    std::vector<std::vector<double>> axes_;
    std::vector<double> step_;  // > 0 when the axis is evenly spaced
    std::size_t points_ = 0;
};

}  // namespace bne
