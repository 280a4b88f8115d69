#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rpreg {

// splitmix64 finalizer; passes BigCrush and is fast enough to run in counter
// mode, which keeps every stream stateless and replayable.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL));
}

/// Identifies an independent substream: (outer round, cell, repetition).
struct StreamId {
    std::uint64_t round = 0;
    std::uint64_t cell = 0;
    std::uint64_t repetition = 0;
};

/// Deterministic random stream. Identical (seed, StreamId) pairs reproduce
/// identical draw sequences regardless of what other streams do, so tree
/// repetitions can run in any order (or concurrently) without affecting
/// results.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, StreamId id = {})
        : base_(mix64(mix64(mix64(seed, id.round), id.cell), id.repetition)) {}

    std::uint64_t next_u64() { return mix64(base_ + counter_++); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b].
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (pair-cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t stream_seed() const { return base_; }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rpreg
