#pragma once

#include <cstdint>

namespace plk {

/// SplitMix64. Tiny, seedable, and identical on every platform, which is what
/// makes seeded runs byte-for-byte reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive. Uses rejection to avoid modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next()); // full range
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Derive an independent stream, for splitting work deterministically.
    SplitMix64 split() { return SplitMix64(next() ^ 0xd1b54a32d192ed03ull); }

private:
    std::uint64_t state_;
};

} // namespace plk
