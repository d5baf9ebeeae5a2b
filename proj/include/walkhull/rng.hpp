#pragma once

#include <array>
#include <cstdint>

#include "walkhull/vec2.hpp"

namespace walkhull {

namespace detail {

// SplitMix64 finalizer (Steele/Lea/Flood constants, Vigna's fixed-increment form).
constexpr std::uint64_t splitmix_gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;
    constexpr std::uint64_t next() { return mix64(state += splitmix_gamma); }
};

constexpr std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// Deterministic random stream: xoshiro256++ (Blackman/Vigna 2019 constants)
/// whose state is derived from (master_seed, stream_id) via SplitMix64, so the
/// same pair reproduces the same sequence bit-for-bit and distinct stream ids
/// are independent for practical purposes regardless of consumption order.
///
/// Variate consumption schedule (fixed; part of the reproducibility contract):
///  - next_u64: one raw output.
///  - next_unit: one raw output, top 53 bits -> [0, 1).
///  - next_gaussian_pair: Marsaglia polar method; each attempt consumes two
///    uniforms (u, v in (-1, 1)); repeat until 0 < u^2 + v^2 < 1; one accepted
///    attempt yields both N(0,1) coordinates.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : master_seed_(master_seed), stream_id_(stream_id) {
        detail::SplitMix64 seeder{detail::mix64(master_seed + detail::splitmix_gamma) ^
                                  detail::mix64(stream_id + 0x94D049BB133111EBULL)};
        for (auto& s : s_) s = seeder.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1; // xoshiro state must be nonzero
    }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl64(s_[3], 45);
        return result;
    }

    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    Vec2 next_gaussian_pair() {
        for (;;) {
            const double u = 2.0 * next_unit() - 1.0;
            const double v = 2.0 * next_unit() - 1.0;
            const double s = u * u + v * v;
            if (s >= 1.0 || s == 0.0) continue;
            const double f = std::sqrt(-2.0 * std::log(s) / s);
            return {u * f, v * f};
        }
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> s_;
};

/// Stream-id namespaces so one experiment's sub-draws never collide with its
/// per-trial path streams.
namespace stream_ns {
constexpr std::uint64_t path = 0;
constexpr std::uint64_t resample = std::uint64_t{1} << 32;
constexpr std::uint64_t aux = std::uint64_t{2} << 32;
} // namespace stream_ns

} // namespace walkhull
