#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace bne {

// Largest number of bundles of interest / action atoms per bidder.
inline constexpr std::size_t kMaxAtoms = 4;

// Fixed-capacity real vector. The tag keeps valuations and bids from mixing.
template <class Tag>
class SmallVector {
public:
    SmallVector() = default;

    explicit SmallVector(std::size_t n, double fill = 0.0) : size_(checked(n)) {
        std::fill_n(data_.begin(), n, fill);
    }

    SmallVector(std::initializer_list<double> xs) : size_(checked(xs.size())) {
        std::copy(xs.begin(), xs.end(), data_.begin());
    }

    static SmallVector from(std::span<const double> xs) {
        SmallVector v(xs.size());
        std::copy(xs.begin(), xs.end(), v.data_.begin());
        return v;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    double& operator[](std::size_t k) { return data_[k]; }
    double operator[](std::size_t k) const { return data_[k]; }

    double* begin() { return data_.data(); }
    double* end() { return data_.data() + size_; }
    const double* begin() const { return data_.data(); }
    const double* end() const { return data_.data() + size_; }

    std::span<const double> span() const { return {data_.data(), size_}; }

    friend bool operator==(const SmallVector& a, const SmallVector& b) {
        return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
    }

private:
    static std::size_t checked(std::size_t n) {
        if (n > kMaxAtoms) throw std::length_error("SmallVector: dimension exceeds capacity");
        return n;
    }

    std::array<double, kMaxAtoms> data_{};
    std::size_t size_ = 0;
};

struct ValuationTag {};
struct BidTag {};

// Values for the bidder's bundles of interest.
using Valuation = SmallVector<ValuationTag>;
// One non-negative bid per action atom.
using Bid = SmallVector<BidTag>;

}  // namespace bne
