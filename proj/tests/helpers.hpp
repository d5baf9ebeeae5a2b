#pragma once

// Test-only oracles and generators, independent of the library's hull and
// distance code paths.

#include <algorithm>
#include <cmath>
#include <vector>

#include "walkhull/polygon.hpp"
#include "walkhull/rng.hpp"

namespace testutil {

using walkhull::Vec2;

// Half-plane brute-force hull-vertex oracle: p stays iff some open half-plane
// with boundary through p strictly excludes every other (distinct) point,
// i.e. the directions q - p leave an angular gap wider than pi. Gap-width
// comparisons are exact sign predicates, the atan2 sort only orders them.
inline std::vector<Vec2> hull_vertices_oracle(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), walkhull::lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Vec2> kept;
    for (const Vec2 p : points) {
        std::vector<Vec2> dirs;
        for (const Vec2 q : points)
            if (!(q == p)) dirs.push_back(q - p);
        if (dirs.empty()) {
            kept.push_back(p);
            continue;
        }
        std::sort(dirs.begin(), dirs.end(), [](Vec2 a, Vec2 b) {
            return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
        });
        bool extreme = false;
        bool one_ray = true;
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const Vec2 d1 = dirs[i];
            const Vec2 d2 = dirs[(i + 1) % dirs.size()];
            if (walkhull::cross(d1, d2) < 0.0) extreme = true; // CCW gap strictly > pi
            if (!(walkhull::cross(d1, d2) == 0.0 && walkhull::dot(d1, d2) > 0.0)) one_ray = false;
        }
        if (extreme || one_ray) kept.push_back(p);
    }
    return kept; // lex-sorted
}

inline double all_pairs_diameter(const std::vector<Vec2>& points) {
    double best2 = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best2 = std::max(best2, (points[j] - points[i]).norm2());
    return std::sqrt(best2);
}

// Distance from a point to a convex polygon (0 inside), edge by edge.
inline double point_to_polygon(const Vec2 p, const walkhull::ConvexPolygon& k) {
    const auto& v = k.vertices();
    if (v.size() == 1) return (p - v[0]).norm();
    auto seg_dist = [&](Vec2 a, Vec2 b) {
        const Vec2 ab = b - a;
        const double t = std::clamp(walkhull::dot(p - a, ab) / ab.norm2(), 0.0, 1.0);
        return (p - (a + ab * t)).norm();
    };
    if (v.size() == 2) return seg_dist(v[0], v[1]);
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        if (walkhull::orient(a, b, p) < 0.0) inside = false;
        best = std::min(best, seg_dist(a, b));
    }
    return inside ? 0.0 : best;
}

inline std::vector<Vec2> random_points(walkhull::RandomStream& rng, std::size_t count,
                                       double lo = 0.0, double hi = 1.0) {
    std::vector<Vec2> pts(count);
    for (auto& p : pts)
        p = {lo + (hi - lo) * rng.next_unit(), lo + (hi - lo) * rng.next_unit()};
    return pts;
}

inline std::vector<Vec2> random_lattice_points(walkhull::RandomStream& rng, std::size_t count,
                                               std::int64_t span) {
    std::vector<Vec2> pts(count);
    for (auto& p : pts) {
        const auto ix = static_cast<std::int64_t>(rng.next_u64() % (2 * span + 1)) - span;
        const auto iy = static_cast<std::int64_t>(rng.next_u64() % (2 * span + 1)) - span;
        p = {static_cast<double>(ix), static_cast<double>(iy)};
    }
    return pts;
}

} // namespace testutil
