#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "walkhull/polygon.hpp"

namespace walkhull {

struct DiameterResult {
    double value = 0.0;
    std::size_t i = 0; // witness vertex indices, i <= j, lowest pair on ties
    std::size_t j = 0;
};

/// Rotating-calipers diameter: for each edge the antipodal vertex advances
/// monotonically, so all farthest pairs are visited in O(h).
inline DiameterResult diameter(const ConvexPolygon& k) {
    const auto& v = k.vertices();
    const std::size_t h = v.size();
    if (h == 1) return {0.0, 0, 0};
    if (h == 2) return {(v[1] - v[0]).norm(), 0, 1};

    DiameterResult best;
    double best2 = -1.0;
    auto consider = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const double d2 = (v[b] - v[a]).norm2();
        if (d2 > best2 || (d2 == best2 && (a < best.i || (a == best.i && b < best.j)))) {
            best2 = d2;
            best.i = a;
            best.j = b;
        }
    };

    std::size_t jj = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const std::size_t in = (i + 1) % h;
        const Vec2 e = v[in] - v[i];
        std::size_t guard = 0;
        while (cross(e, v[(jj + 1) % h] - v[jj]) > 0.0) {
            jj = (jj + 1) % h;
            if (++guard > 2 * h) throw std::logic_error("diameter: caliper sweep failed to settle");
        }
        consider(i, jj);
        consider(in, jj);
    }
    best.value = std::sqrt(best2);
    return best;
}

/// K / diam(K); rejects zero-diameter (single-point) input.
inline ConvexPolygon scale_unit_diameter(const ConvexPolygon& k) {
    const double d = diameter(k).value;
    if (d <= 0.0) throw std::domain_error("scale_unit_diameter: zero-diameter polygon");
    std::vector<Vec2> scaled;
    scaled.reserve(k.count());
    for (Vec2 v : k.vertices()) scaled.push_back(v / d);
    return ConvexPolygon::unchecked(std::move(scaled));
}

} // namespace walkhull
