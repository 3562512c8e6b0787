#pragma once

#include <cstdint>
#include <random>

namespace knapmoea {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// One stream per trial: the same key yields the same draw sequence on
/// every run of the same build, which is what makes trajectories and
/// experiment outputs byte-reproducible. The uniform mappings below are
/// implemented on top of raw mt19937_64 words instead of
/// std::uniform_*_distribution, whose output is not pinned by the
/// standard.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::seed_seq seq{seed, stream_id};
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], both ends inclusive. Unbiased via
    /// masked rejection.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;  // inclusive width - 1
        if (span == UINT64_MAX) return next_u64();
        const std::uint64_t range = span + 1;
        std::uint64_t mask = range - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t draw;
        do {
            draw = next_u64() & mask;
        } while (draw >= range);
        return lo + draw;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace knapmoea
