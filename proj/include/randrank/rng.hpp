#pragma once

#include <cstdint>

namespace randrank {

// SplitMix64: tiny, fast, passes BigCrush, and trivially seedable from any
// 64-bit value. One independent engine per Monte Carlo replicate keeps
// results identical no matter how replicates are split across threads.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Mixes a base seed with a substream index so that substreams are
// decorrelated. Used to give each replicate its own engine.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace randrank
