#pragma once

#include <cstdint>

namespace polarsim {

// SplitMix64 finalizer (Steele & Vigna). Bijective avalanche over 64 bits;
// used for seed expansion and per-trial seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** 1.0 (Blackman & Vigna). Pure 64-bit integer arithmetic, so the
// stream is identical on every platform; this generator is part of the
// reproducibility contract and is named in run manifests.
//
// State is expanded from a 64-bit seed with SplitMix64, per the authors'
// recommendation.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed = 0) noexcept {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            word = mix64(sm);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    std::uint64_t operator()() noexcept { return next(); }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~0ULL; }

    // Uniform double in [0,1): top 53 bits scaled by 2^-53.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform double strictly inside (0,1): mantissa offset by one half step,
    // so neither endpoint is reachable.
    double uniform_open01() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Binomial(n, p) sample by CDF inversion. Consumes exactly one uniform draw,
// which keeps the per-round stream layout easy to state: one draw per
// informative agent, in agent-index order.
//
// The pmf walk uses only +,*,/ in a fixed order, so draws are bit-stable on
// any IEEE-754 platform:
//   pmf(0)   = (1-p)^n                       (repeated multiplication)
//   pmf(k+1) = pmf(k) * ((n-k)/(k+1)) * (p/(1-p)),   evaluated left to right
inline int sample_binomial(Xoshiro256StarStar& rng, int n, double p) noexcept {
    const double u = rng.uniform01();
    double pmf = 1.0;
    for (int i = 0; i < n; ++i) {
        pmf *= (1.0 - p);
    }
    const double odds = p / (1.0 - p);
    double cdf = pmf;
    int k = 0;
    while (cdf <= u && k < n) {
        pmf = pmf * (static_cast<double>(n - k) / static_cast<double>(k + 1)) * odds;
        cdf += pmf;
        ++k;
    }
    return k;
}

}  // namespace polarsim
