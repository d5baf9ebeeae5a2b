#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "walkhull/grid.hpp"
#include "walkhull/polygon.hpp"

namespace walkhull {

/// R(theta) = max_k x_k.e_theta - min_k x_k.e_theta.
inline double projection_range(std::span<const Vec2> points, double theta) {
    if (points.empty()) throw std::invalid_argument("projection_range: empty point set");
    const Vec2 e = unit_vector(theta);
    double lo = dot(points[0], e), hi = lo;
    for (Vec2 p : points) {
        const double d = dot(p, e);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

inline double projection_range(const std::vector<Vec2>& points, double theta) {
    return projection_range(std::span<const Vec2>(points), theta);
}

/// Discretized Cauchy formula: (2*pi/m) * sum_j max_k (x_k . e_theta_j).
/// Within 2*pi*R*(pi/m) of the exact perimeter, R = max point norm, since the
/// support function is R-Lipschitz in theta.
inline double cauchy_perimeter(std::span<const Vec2> points, const DirectionGrid& grid) {
    if (grid.span != DirectionGrid::Span::FullCircle)
        throw std::invalid_argument("cauchy_perimeter: grid must cover [0, 2*pi)");
    const ConvexPolygon hull = convex_hull(points);
    detail::SupportSweeper sweep(hull);
    double sum = 0.0, comp = 0.0;
    for (std::size_t j = 0; j < grid.m; ++j) {
        const double term = sweep(grid.direction(j));
        const double t = sum + term; // Neumaier compensation
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return (sum + comp) * grid.step();
}

inline double cauchy_perimeter(const std::vector<Vec2>& points, const DirectionGrid& grid) {
    return cauchy_perimeter(std::span<const Vec2>(points), grid);
}

/// Error bound that goes with cauchy_perimeter.
inline double cauchy_grid_bound(double max_norm, const DirectionGrid& grid) {
    constexpr double pi = 3.14159265358979323846;
    return 2.0 * pi * max_norm * (pi / static_cast<double>(grid.m));
}

/// max_j R(theta_j) over a grid of [0, pi]. Never exceeds the true diameter;
/// the gap is at most 2 * diam * (1 - cos(pi / (2m))).
inline double diameter_via_projections(std::span<const Vec2> points, const DirectionGrid& grid) {
    if (points.empty()) throw std::invalid_argument("diameter_via_projections: empty point set");
    if (grid.span != DirectionGrid::Span::HalfCircle)
        throw std::invalid_argument("diameter_via_projections: grid must cover [0, pi]");
    const ConvexPolygon hull = convex_hull(points);
    detail::SupportSweeper up(hull), down(hull);
    double best = 0.0;
    for (std::size_t j = 0; j < grid.m; ++j) {
        const Vec2 e = grid.direction(j);
        best = std::max(best, up(e) + down(Vec2{-e.x, -e.y}));
    }
    return best;
}

inline double diameter_via_projections(const std::vector<Vec2>& points, const DirectionGrid& grid) {
    return diameter_via_projections(std::span<const Vec2>(points), grid);
}

/// Error bound that goes with diameter_via_projections.
inline double projection_grid_bound(double diam, const DirectionGrid& grid) {
    constexpr double pi = 3.14159265358979323846;
    return 2.0 * diam * (1.0 - std::cos(pi / (2.0 * static_cast<double>(grid.m))));
}

} // namespace walkhull
