#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bne {

inline constexpr int kMaxGoods = 32;

// A set of goods, stored as a bitmask over good indices.
class Bundle {
public:
    constexpr Bundle() = default;
    constexpr explicit Bundle(std::uint32_t bits) : bits_(bits) {}

    static Bundle of(std::initializer_list<int> goods);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int count() const { return std::popcount(bits_); }
    constexpr bool contains(int good) const { return (bits_ >> good) & 1u; }
    constexpr bool overlaps(Bundle o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(Bundle o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr Bundle operator|(Bundle o) const { return Bundle(bits_ | o.bits_); }
    constexpr Bundle operator&(Bundle o) const { return Bundle(bits_ & o.bits_); }
    constexpr bool operator==(const Bundle&) const = default;

private:
    std::uint32_t bits_ = 0;
};

// Names goods and turns strings such as "ABCD" into bundles.
class GoodRegistry {
public:
    GoodRegistry() = default;
    explicit GoodRegistry(std::vector<std::string> names);

    // Single-letter goods "A", "B", ...
    static GoodRegistry letters(int count);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int good) const { return names_.at(static_cast<std::size_t>(good)); }
    int index_of(std::string_view name) const;

    // Parses a concatenation of single-letter good names.
    Bundle parse(std::string_view letters) const;
    std::string format(Bundle b) const;
    Bundle all() const;

private:
    std::vector<std::string> names_;
};

}  // namespace bne
