#pragma once

#include <cmath>
#include <stdexcept>

namespace walkhull {

/// Planar point / displacement. Coordinates must stay finite.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of a x b; sign gives orientation (> 0 = left turn).
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Orientation of the triple (a, b, c); exact zero is collinear.
constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Rotate +90 degrees.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// (cos theta, sin theta).
inline Vec2 unit_vector(double theta) {
    if (!std::isfinite(theta)) throw std::invalid_argument("unit_vector: theta must be finite");
    return {std::cos(theta), std::sin(theta)};
}

/// Lexicographic (x, then y) order; total order used for hull chains.
constexpr bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

} // namespace walkhull
