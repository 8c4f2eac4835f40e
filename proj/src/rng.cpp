#include "ttensor/rng.hpp"

#include <stdexcept>

namespace ttensor {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream),
      engine_(splitmix64(seed ^ splitmix64(stream ^ 0xD1B54A32D192ED03ULL))) {}

double RngStream::uniform(double lo, double hi) {
    // 53 random mantissa bits -> [0, 1).
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::uint64_t RngStream::index(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RngStream::index needs n > 0");
    return engine_() % n;
}

RngStream RngStream::substream(std::uint64_t key) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(stream_)), key);
}

}  // namespace ttensor
