#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bne {

// Unscrambled Sobol sequence in Gray-code order (Joe-Kuo direction numbers).
class SobolSequence {
public:
    static constexpr std::size_t kMaxDimension = 32;
    static constexpr int kBits = 32;

    explicit SobolSequence(std::size_t dimension);

    std::size_t dimension() const { return dim_; }

    // Integer coordinate of point `index` (< 2^32) in dimension d.
    std::uint32_t integer(std::uint64_t index, std::size_t d) const;
    // Point `index` scaled to [0, 1).
    std::vector<double> point(std::uint64_t index) const;

    // Integer points [start, start + count), row-major count x dimension, XORed with `shift`.
    void fill_integers(std::uint64_t start, std::size_t count, std::span<const std::uint32_t> shift,
                       std::span<std::uint32_t> out) const;

private:
    std::size_t dim_;
    std::vector<std::array<std::uint32_t, kBits>> v_;
};

}  // namespace bne
