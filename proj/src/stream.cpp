#include "bne/sampling/stream.hpp"

#include <stdexcept>

#include "bne/sampling/sobol.hpp"
#include "bne/util/hash.hpp"

namespace bne {

std::string to_string(StreamKind k) { return k == StreamKind::Sobol ? "sobol" : "pseudo"; }

StreamKind stream_kind_from_string(const std::string& s) {
    if (s == "sobol") return StreamKind::Sobol;
    if (s == "pseudo") return StreamKind::Pseudo;
    throw std::invalid_argument("unknown stream kind '" + s + "'");
}

SampleStream::SampleStream(StreamKind kind, std::size_t dimension, std::uint64_t key, std::uint64_t skip)
    : kind_(kind), dim_(dimension), key_(key), skip_(skip) {
    if (dimension == 0) throw std::invalid_argument("SampleStream: dimension must be positive");
    if (kind == StreamKind::Sobol && dimension > SobolSequence::kMaxDimension)
        throw std::out_of_range("SampleStream: dimension above the Sobol direction-number table");
}

std::vector<double> SampleStream::generate(std::size_t n) const {
    std::vector<double> out(n * dim_);
    if (kind_ == StreamKind::Sobol) {
        // One Sobol object per dimension count is cheap to build; keep it local for thread safety.
        SobolSequence seq(dim_);
        std::vector<std::uint32_t> shift(dim_);
        for (std::size_t d = 0; d < dim_; ++d) shift[d] = static_cast<std::uint32_t>(derive_key({key_, d}) >> 32);
        std::vector<std::uint32_t> ints(n * dim_);
        seq.fill_integers(skip_, n, shift, ints);
        // Cell midpoints keep every coordinate strictly inside (0, 1).
        for (std::size_t k = 0; k < ints.size(); ++k) out[k] = (static_cast<double>(ints[k]) + 0.5) * 0x1p-32;
    } else {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t d = 0; d < dim_; ++d) {
                std::uint64_t h = splitmix64(key_ ^ splitmix64((skip_ + k) * 0x100000001B3ull + d));
                out[k * dim_ + d] = (static_cast<double>(h >> 11) + 0.5) * 0x1p-53;
            }
    }
    return out;
}

}  // namespace bne
