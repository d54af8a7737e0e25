#include "bne/sampling/sobol.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bne {

namespace {

struct Primitive {
    int degree;
    std::uint32_t coeffs;  // interior coefficients of the primitive polynomial
    std::array<std::uint32_t, 8> m;
};

// new-joe-kuo-6.21201, dimensions 2..32.
constexpr Primitive kTable[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
    {6, 13, {1, 1, 1, 15, 21, 21}},
    {6, 16, {1, 3, 1, 13, 27, 49}},
    {6, 19, {1, 1, 1, 15, 7, 5}},
    {6, 22, {1, 3, 1, 15, 13, 25}},
    {6, 25, {1, 1, 5, 5, 19, 61}},
    {7, 1, {1, 3, 7, 11, 23, 15, 103}},
    {7, 4, {1, 3, 7, 13, 13, 15, 69}},
    {7, 7, {1, 1, 3, 13, 7, 35, 63}},
    {7, 8, {1, 3, 5, 9, 1, 25, 53}},
    {7, 14, {1, 3, 1, 13, 9, 35, 107}},
    {7, 19, {1, 3, 1, 5, 27, 61, 31}},
    {7, 21, {1, 1, 5, 11, 19, 41, 61}},
    {7, 28, {1, 3, 5, 3, 3, 13, 69}},
    {7, 31, {1, 1, 7, 13, 1, 19, 1}},
    {7, 32, {1, 3, 7, 5, 13, 19, 59}},
    {7, 37, {1, 1, 3, 9, 25, 29, 41}},
    {7, 41, {1, 3, 5, 13, 23, 1, 55}},
    {7, 42, {1, 3, 7, 3, 13, 59, 17}},
};

static_assert(sizeof(kTable) / sizeof(kTable[0]) == SobolSequence::kMaxDimension - 1);

}  // namespace

SobolSequence::SobolSequence(std::size_t dimension) : dim_(dimension), v_(dimension) {
    if (dimension == 0 || dimension > kMaxDimension)
        throw std::out_of_range("Sobol dimension must lie in [1, " + std::to_string(kMaxDimension) + "]");
    for (int k = 0; k < kBits; ++k) v_[0][static_cast<std::size_t>(k)] = 1u << (kBits - 1 - k);
    for (std::size_t d = 1; d < dim_; ++d) {
        const Primitive& p = kTable[d - 1];
        auto& v = v_[d];
        const int s = p.degree;
        for (int k = 0; k < s && k < kBits; ++k)
            v[static_cast<std::size_t>(k)] = p.m[static_cast<std::size_t>(k)] << (kBits - 1 - k);
        for (int k = s; k < kBits; ++k) {
            std::uint32_t x = v[static_cast<std::size_t>(k - s)] ^ (v[static_cast<std::size_t>(k - s)] >> s);
            for (int l = 1; l < s; ++l)
                if ((p.coeffs >> (s - 1 - l)) & 1u) x ^= v[static_cast<std::size_t>(k - l)];
            v[static_cast<std::size_t>(k)] = x;
        }
    }
}

std::uint32_t SobolSequence::integer(std::uint64_t index, std::size_t d) const {
    if (index >> 32) throw std::out_of_range("Sobol index exceeds 2^32");
    std::uint64_t g = index ^ (index >> 1);
    std::uint32_t x = 0;
    for (std::size_t k = 0; g; ++k, g >>= 1)
        if (g & 1u) x ^= v_[d][k];
    return x;
}

std::vector<double> SobolSequence::point(std::uint64_t index) const {
    std::vector<double> p(dim_);
    for (std::size_t d = 0; d < dim_; ++d) p[d] = static_cast<double>(integer(index, d)) * 0x1p-32;
    return p;
}

void SobolSequence::fill_integers(std::uint64_t start, std::size_t count, std::span<const std::uint32_t> shift,
                                  std::span<std::uint32_t> out) const {
    if (count == 0) return;
    if ((start + count - 1) >> 32) throw std::out_of_range("Sobol index exceeds 2^32");
    std::vector<std::uint32_t> x(dim_);
    for (std::size_t d = 0; d < dim_; ++d) x[d] = integer(start, d);
    for (std::size_t k = 0;; ++k) {
        for (std::size_t d = 0; d < dim_; ++d) out[k * dim_ + d] = x[d] ^ shift[d];
        if (k + 1 == count) break;
        // Gray-code step from index i to i + 1 flips the direction number of the lowest zero bit of i.
        std::uint64_t i = start + k;
        auto c = static_cast<std::size_t>(std::countr_one(i));
        for (std::size_t d = 0; d < dim_; ++d) x[d] ^= v_[d][c];
    }
}

}  // namespace bne
