#pragma once

#include <cmath>
#include <stdexcept>

#include "walkhull/grid.hpp"

namespace walkhull {

/// Grid estimate of the Hausdorff distance between convex polygons, computed
/// as the sup-norm gap of support functions. The true distance lies in
/// [value, value + error_bound].
struct HausdorffResult {
    double value = 0.0;
    double error_bound = 0.0;
    double upper() const { return value + error_bound; }
};

inline HausdorffResult hausdorff(const ConvexPolygon& k1, const ConvexPolygon& k2,
                                 const DirectionGrid& grid) {
    if (grid.span != DirectionGrid::Span::FullCircle)
        throw std::invalid_argument("hausdorff: grid must cover [0, 2*pi)");
    if (grid.m < 16) throw std::invalid_argument("hausdorff: need m >= 16");
    detail::SupportSweeper s1(k1), s2(k2);
    double value = 0.0;
    for (std::size_t j = 0; j < grid.m; ++j) {
        const Vec2 e = grid.direction(j);
        value = std::max(value, std::abs(s1(e) - s2(e)));
    }
    constexpr double pi = 3.14159265358979323846;
    const double lipschitz = max_vertex_norm(k1) + max_vertex_norm(k2);
    return {value, lipschitz * pi / static_cast<double>(grid.m)};
}

} // namespace walkhull
