#pragma once

#include <cstdint>

namespace gbs {

/// splitmix64 mixing step; used for seeding and per-trial stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// xoshiro256**: seedable 64-bit generator; results and reports record the
/// identifier so searches replay across machines.
class Xoshiro256 {
public:
    static constexpr const char* kAlgorithm = "xoshiro256**";

    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    /// Independent stream for one trial of a seeded search: the draw
    /// sequence depends only on (seed, trial), never on execution order.
    static Xoshiro256 for_trial(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ull * (trial + 1));
        return Xoshiro256(splitmix64(sm));
    }

    std::uint64_t next() {
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

    bool next_bit() { return next() >> 63; }

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        // rejection to avoid modulo bias
        const std::uint64_t limit = bound * (~std::uint64_t(0) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

    std::uint64_t state_[4] = {};
};

}  // namespace gbs
