#pragma once

#include <cstdint>
#include <limits>

namespace codescout {

// SplitMix64 (Steele, Lea, Flood 2014). Counter-based: the state advances by a fixed
// odd constant, so independent streams come from hashing (seed, stream index).
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state = 0) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Generator for trial `index` under `seed`; streams do not depend on thread layout.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(mix(seed ^ mix(index + kGamma)));
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

// Uniform double in [0,1) from the top 53 bits.
template <class Rng>
double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace codescout
