#ifndef PCGBT_RANDOM_HPP
#define PCGBT_RANDOM_HPP

#include <array>
#include <cstdint>

namespace pcgbt {

/// Seeded random stream with a fixed, portable recurrence so that the same
/// seed yields the same draw sequence on every platform.
///
/// The generator is xoshiro256** 1.0 (Blackman & Vigna, public domain):
///
///     result = rotl(s[1] * 5, 7) * 9
///     t = s[1] << 17
///     s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3]
///     s[2] ^= t;    s[3] = rotl(s[3], 45)
///
/// State is seeded from the 64-bit seed via four steps of splitmix64
/// (Steele, Lea & Flood, public domain):
///
///     z = (x += 0x9E3779B97F4A7C15)
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     return z ^ (z >> 31)
///
/// Derived draws:
///   nextDouble()   = (nextU64() >> 11) * 2^-53, uniform in [0, 1)
///   nextBelow(n)   = high 64 bits of nextU64() * n (multiply-shift bound;
///                    bias is at most n / 2^64, negligible for segment counts)
class RandomStream {
public:
    explicit RandomStream(uint64_t seed) : seed_(seed) {
        uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    uint64_t nextU64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        ++draws_;
        return result;
    }

    /// Uniform double in [0, 1), 53 bits of precision. Consumes one draw.
    double nextDouble() {
        return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be >= 1. Consumes one draw.
    uint64_t nextBelow(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(nextU64()) * n) >> 64);
    }

    uint64_t seed() const { return seed_; }

    /// Number of raw 64-bit draws consumed so far.
    uint64_t drawCount() const { return draws_; }

private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static constexpr uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
    std::array<uint64_t, 4> state_{};
    uint64_t draws_ = 0;
};

}  // namespace pcgbt

#endif
