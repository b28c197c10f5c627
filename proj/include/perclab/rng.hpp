#pragma once

#include <cmath>
#include <cstdint>

namespace perclab {

// Counter-based randomness: every random quantity in the library is a pure
// function of (seed, stream, counter), so sampling order and thread count
// never change results.

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Disjoint logical streams per use site.
enum class RngStream : std::uint64_t {
    Edges = 1,
    CoverWalk = 2,
    HittingWalk = 3,
    Gff = 4,
    Candidates = 5,
    Pairs = 6,
    Plan = 7,
};

inline constexpr std::uint64_t stream_key(std::uint64_t seed, RngStream stream,
                                          std::uint64_t substream = 0) noexcept {
    std::uint64_t k = mix64(seed ^ 0x243f6a8885a308d3ULL);
    k = mix64(k + (static_cast<std::uint64_t>(stream) << 56) + 0x9e3779b97f4a7c15ULL);
    return mix64(k ^ mix64(substream));
}

inline constexpr std::uint64_t counter_word(std::uint64_t key, std::uint64_t counter) noexcept {
    return mix64(key + 0x9e3779b97f4a7c15ULL * counter);
}

// Uniform double in [0, 1) from the top 53 bits.
inline constexpr double word_to_unit(std::uint64_t w) noexcept {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

inline constexpr double unit_at(std::uint64_t key, std::uint64_t counter) noexcept {
    return word_to_unit(counter_word(key, counter));
}

// Sequential view over one counter stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
    CounterRng(std::uint64_t seed, RngStream stream, std::uint64_t substream = 0) noexcept
        : key_(stream_key(seed, stream, substream)) {}

    std::uint64_t next_word() noexcept { return counter_word(key_, ctr_++); }
    double next_unit() noexcept { return word_to_unit(next_word()); }

    // Unbiased integer in [0, bound), bound >= 1 (Lemire multiply-shift).
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        using u128 = unsigned __int128;
        u128 m = static_cast<u128>(next_word()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t t = (~bound + 1) % bound;  // 2^64 mod bound
            while (lo < t) {
                m = static_cast<u128>(next_word()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Standard normal via Box-Muller; the paired value is cached.
    double next_normal() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(next_word() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace perclab
