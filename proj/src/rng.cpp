#include "randrank/rng.hpp"

namespace randrank {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    // One extra SplitMix64 scramble of (seed, stream) so that consecutive
    // stream indices land far apart in the base sequence.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace randrank
