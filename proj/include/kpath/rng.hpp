#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace kpath {

/// Deterministic random source. mt19937_64 has a standardized output
/// sequence, so identical seeds give identical results on every platform;
/// the bounded draws below avoid std::uniform_int_distribution, whose
/// output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound), unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t x = eng_();
            if (x >= threshold) return x % bound;
        }
    }

    /// Uniform in [lo, hi], inclusive. Requires hi - lo < 2^63.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        assert(lo <= hi);
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    bool coin() { return (eng_() >> 63) != 0; }

    /// Stable seed derivation for sub-streams (splitmix64 finalizer).
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1) + 0xbf58476d1ce4e5b9ull * (c + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace kpath
