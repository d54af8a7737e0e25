#include "bne/core/bundle.hpp"

#include <stdexcept>

namespace bne {

Bundle Bundle::of(std::initializer_list<int> goods) {
    std::uint32_t bits = 0;
    for (int g : goods) {
        if (g < 0 || g >= kMaxGoods) throw std::out_of_range("Bundle::of: good index out of range");
        bits |= 1u << g;
    }
    return Bundle(bits);
}

GoodRegistry::GoodRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(kMaxGoods))
        throw std::length_error("GoodRegistry: too many goods");
}

GoodRegistry GoodRegistry::letters(int count) {
    std::vector<std::string> names;
    for (int g = 0; g < count; ++g) names.emplace_back(1, static_cast<char>('A' + g));
    return GoodRegistry(std::move(names));
}

int GoodRegistry::index_of(std::string_view name) const {
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (names_[g] == name) return static_cast<int>(g);
    throw std::invalid_argument("unknown good '" + std::string(name) + "'");
}

Bundle GoodRegistry::parse(std::string_view letters) const {
    std::uint32_t bits = 0;
    for (char c : letters) bits |= 1u << index_of(std::string_view(&c, 1));
    return Bundle(bits);
}

std::string GoodRegistry::format(Bundle b) const {
    std::string out;
    for (int g = 0; g < size(); ++g)
        if (b.contains(g)) out += names_[static_cast<std::size_t>(g)];
    return out.empty() ? "{}" : out;
}

Bundle GoodRegistry::all() const {
    return Bundle(size() == 32 ? ~0u : ((1u << size()) - 1u));
}

}  // namespace bne
