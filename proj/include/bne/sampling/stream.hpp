#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bne {

enum class StreamKind { Sobol, Pseudo };

std::string to_string(StreamKind k);
StreamKind stream_kind_from_string(const std::string& s);

// Deterministic stream of points in (0, 1)^dimension identified by a 64-bit key.
// Sobol streams apply a random digital shift derived from the key; pseudo streams hash
// (key, index, coordinate) directly. Either way point k depends only on (key, k).
class SampleStream {
public:
    SampleStream(StreamKind kind, std::size_t dimension, std::uint64_t key, std::uint64_t skip = 0);

    StreamKind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }
    std::uint64_t key() const { return key_; }

    // Points skip .. skip + n - 1, row-major n x dimension.
    std::vector<double> generate(std::size_t n) const;

private:
    StreamKind kind_;
    std::size_t dim_;
    std::uint64_t key_;
    std::uint64_t skip_;
};

}  // namespace bne
