#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walkhull/distribution.hpp"
#include "walkhull/rng.hpp"

namespace walkhull {

/// Walk trajectory S_0 .. S_n; positions[0] is exactly the origin.
struct Path {
    std::vector<Vec2> positions;

    std::int64_t steps() const { return static_cast<std::int64_t>(positions.size()) - 1; }
};

/// Deterministic trajectory for a given (distribution, n, stream).
inline Path sample_path(const IncrementDistribution& dist, std::int64_t n, RandomStream stream) {
    if (n < 0) throw std::invalid_argument("sample_path: n must be >= 0");
    Path path;
    path.positions.reserve(static_cast<std::size_t>(n) + 1);
    Vec2 pos{0.0, 0.0};
    path.positions.push_back(pos);
    for (std::int64_t k = 0; k < n; ++k) {
        pos += dist.sample(stream);
        path.positions.push_back(pos);
    }
    return path;
}

} // namespace walkhull
