#pragma once

#include <cstdint>

namespace msrcert {

/// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
/// <random> so that fixed seeds reproduce byte-identical artifacts across
/// platforms and standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Inclusive range [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Derives an independent stream id from a master seed and a salt.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        Rng r(seed ^ (0x6A09E667F3BCC909ull + salt * 0x9E3779B97F4A7C15ull));
        return r.next();
    }

private:
    std::uint64_t state_;
};

} // namespace msrcert
