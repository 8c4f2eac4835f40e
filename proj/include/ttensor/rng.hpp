#pragma once

#include <cstdint>
#include <random>

namespace ttensor {

/// Seeded scalar stream. Equal (seed, stream) pairs give identical sequences
/// on every platform: the engine is std::mt19937_64 (fully specified by the
/// standard) and the conversion to doubles is done here rather than through
/// the implementation-defined std::uniform_real_distribution.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    /// Uniform on [lo, hi).
    double uniform(double lo = -1.0, double hi = 1.0);
    /// Uniform on {0, ..., n-1}; n must be positive.
    std::uint64_t index(std::uint64_t n);

    /// Independent stream derived from this one's (seed, stream) and `key`.
    RngStream substream(std::uint64_t key) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace ttensor
