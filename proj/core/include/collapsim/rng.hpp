#pragma once

#include <cstdint>
#include <random>

namespace collapsim {

// SplitMix64 output function (Steele, Lea, Flood 2014). Used as a key
// derivation / mixing step, not as the main generator.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Key for sub-stream `stream_id` of master seed `seed`. Equivalent to the
// stream_id-th output of a SplitMix64 sequence started at `seed`, computed
// in O(1) so streams can be assigned by index from any worker.
inline std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t stream_id) {
    constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(seed + (stream_id + 1) * golden);
}

// Per-trajectory random stream. A deterministic pure function of
// (seed, stream_id); identical on every platform because all variates are
// built from raw 64-bit engine output rather than std:: distributions.
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream_id)
        : engine_(derive_stream_key(seed, stream_id)) {}

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

    // exponential with the given mean
    double exponential(double mean) {
        double u = uniform();
        return -mean * std::log1p(-u);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace collapsim
