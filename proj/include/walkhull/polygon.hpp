#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkhull/vec2.hpp"

namespace walkhull {

/// Convex polygon as a minimal strictly-convex CCW vertex list starting at the
/// lexicographically smallest vertex. One vertex is a point, two a segment.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Validating constructor; `vertices` must already be the canonical form.
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    static ConvexPolygon unchecked(std::vector<Vec2> vertices) {
        ConvexPolygon k;
        k.vertices_ = std::move(vertices);
        return k;
    }

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t count() const { return vertices_.size(); }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }

    bool operator==(const ConvexPolygon&) const = default;

private:
    std::vector<Vec2> vertices_;
};

namespace detail {

// Builds lower/upper chains of the hull of lex-sorted, deduplicated points.
// Lower chain keeps strict left turns, upper chain strict right turns; both
// run from the lex-min to the lex-max point, so collinear middles drop out.
template <typename GetVec, typename T>
void build_chain(const std::vector<T>& pts, std::vector<T>& out, bool lower, GetVec get) {
    out.clear();
    for (const T& p : pts) {
        while (out.size() >= 2) {
            const Vec2 a = get(out[out.size() - 2]);
            const Vec2 b = get(out[out.size() - 1]);
            const double turn = cross(b - a, get(p) - b);
            if (lower ? turn <= 0.0 : turn >= 0.0)
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
}

} // namespace detail

/// Minimal CCW hull of a non-empty point set (duplicates and interior points
/// removed; collinear input collapses to its two extremes).
inline ConvexPolygon convex_hull(std::span<const Vec2> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    for (Vec2 p : points)
        if (!is_finite(p)) throw std::invalid_argument("convex_hull: non-finite point");

    std::vector<Vec2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return ConvexPolygon::unchecked(std::move(pts));

    std::vector<Vec2> lower, upper;
    auto id = [](Vec2 v) { return v; };
    detail::build_chain(pts, lower, true, id);
    detail::build_chain(pts, upper, false, id);

    std::vector<Vec2> ccw(lower);
    for (std::size_t i = upper.size() - 1; i-- > 1;) ccw.push_back(upper[i]);
    return ConvexPolygon::unchecked(std::move(ccw));
}

inline ConvexPolygon convex_hull(const std::vector<Vec2>& points) {
    return convex_hull(std::span<const Vec2>(points));
}

inline ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) {
    if (vertices.empty()) throw std::invalid_argument("ConvexPolygon: empty vertex list");
    ConvexPolygon canon = convex_hull(vertices);
    if (canon.vertices() != vertices)
        throw std::invalid_argument("ConvexPolygon: vertex list is not a canonical CCW hull");
    vertices_ = std::move(vertices);
}

/// Boundary length; a segment counts twice its length, a point is 0.
inline double perimeter(const ConvexPolygon& k) {
    const auto& v = k.vertices();
    if (v.size() == 1) return 0.0;
    if (v.size() == 2) return 2.0 * (v[1] - v[0]).norm();
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += (v[(i + 1) % v.size()] - v[i]).norm();
    return sum;
}

/// h_K(u) = max over vertices of v . u; `direction` must be unit length.
inline double support(const ConvexPolygon& k, Vec2 direction) {
    const double n = direction.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("support: direction must be a unit vector");
    double best = dot(k.vertices().front(), direction);
    for (Vec2 v : k.vertices()) best = std::max(best, dot(v, direction));
    return best;
}

/// Largest r with the closed ball B(0, r) inside K; 0 unless the origin is
/// strictly interior (degenerate hulls have empty interior).
inline double inradius_at_origin(const ConvexPolygon& k) {
    const auto& v = k.vertices();
    if (v.size() <= 2) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % v.size()];
        const double twice_area = cross(a, b); // = cross(b - a, -a), origin side of edge
        if (twice_area <= 0.0) return 0.0;     // origin on or outside this edge line
        best = std::min(best, twice_area / (b - a).norm());
    }
    return best;
}

} // namespace walkhull
