#pragma once

#include <cstdint>

namespace rainbow {

// SplitMix64 (Steele, Lea, Flood). The i-th output of a stream seeded with s
// is mix(s + (i + 1) * kGamma), so any position can be evaluated directly.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index) {
    return splitmix_mix(seed + (index + 1) * kSplitMixGamma);
}

/// Maps a 64-bit word onto [0, bound) by multiply-high (no modulo bias).
constexpr std::uint64_t scale_to(std::uint64_t word, std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += kSplitMixGamma;
        return splitmix_mix(state_);
    }

    constexpr std::uint64_t below(std::uint64_t bound) { return scale_to(next(), bound); }

private:
    std::uint64_t state_;
};

}  // namespace rainbow
