#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace bne {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Counter-based key derivation: folds each word into the running hash.
inline std::uint64_t derive_key(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (std::uint64_t w : words) h = splitmix64(h ^ splitmix64(w));
    return h;
}

inline std::uint64_t double_bits(double x) { return std::bit_cast<std::uint64_t>(x); }

// FNV-1a over bytes, used to name artifact directories.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t k = 0; k < len; ++k) h = (h ^ p[k]) * 0x100000001b3ull;
    return h;
}

}  // namespace bne
