#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "walkhull/polygon.hpp"

namespace walkhull {

/// Evenly spaced directions theta_j = j * span / m, j = 0..m-1, where span is
/// 2*pi (full circle: Cauchy, Hausdorff) or pi (projection ranges). Unit
/// vectors are precomputed once; sweeps over the grid are pure dot products.
struct DirectionGrid {
    enum class Span { FullCircle, HalfCircle };

    std::size_t m;
    Span span;
    std::vector<Vec2> dirs;

    DirectionGrid(std::size_t m_, Span span_) : m(m_), span(span_) {
        if (m < 4) throw std::invalid_argument("DirectionGrid: need m >= 4");
        dirs.reserve(m);
        for (std::size_t j = 0; j < m; ++j) dirs.push_back(unit_vector(angle(j)));
    }

    static DirectionGrid full(std::size_t m) { return {m, Span::FullCircle}; }
    static DirectionGrid half(std::size_t m) { return {m, Span::HalfCircle}; }

    double step() const {
        constexpr double pi = 3.14159265358979323846;
        return (span == Span::FullCircle ? 2.0 * pi : pi) / static_cast<double>(m);
    }
    double angle(std::size_t j) const { return step() * static_cast<double>(j); }
    Vec2 direction(std::size_t j) const { return dirs[j]; }
};

namespace detail {

// Rotating support pointer: as theta increases the argmax vertex of a strictly
// convex CCW polygon advances monotonically, so a full sweep costs O(m + h).
class SupportSweeper {
public:
    explicit SupportSweeper(const ConvexPolygon& k) : v_(k.vertices()) {}

    double operator()(Vec2 e) {
        const std::size_t h = v_.size();
        if (h <= 2) {
            double best = dot(v_[0], e);
            for (std::size_t i = 1; i < h; ++i) best = std::max(best, dot(v_[i], e));
            return best;
        }
        if (!primed_) {
            for (std::size_t i = 1; i < h; ++i)
                if (dot(v_[i], e) > dot(v_[arg_], e)) arg_ = i;
            primed_ = true;
            return dot(v_[arg_], e);
        }
        double cur = dot(v_[arg_], e);
        for (;;) {
            const std::size_t nxt = (arg_ + 1) % h;
            const double cand = dot(v_[nxt], e);
            if (cand > cur) {
                arg_ = nxt;
                cur = cand;
            } else {
                break;
            }
        }
        return cur;
    }

private:
    const std::vector<Vec2>& v_;
    std::size_t arg_ = 0;
    bool primed_ = false;
};

} // namespace detail

/// h_K(e_theta_j) for every grid direction, in grid order.
inline std::vector<double> support_sweep(const ConvexPolygon& k, const DirectionGrid& grid) {
    detail::SupportSweeper sweep(k);
    std::vector<double> out(grid.m);
    for (std::size_t j = 0; j < grid.m; ++j) out[j] = sweep(grid.direction(j));
    return out;
}

/// Largest vertex norm; the Lipschitz constant of theta -> h_K(e_theta).
inline double max_vertex_norm(const ConvexPolygon& k) {
    double r = 0.0;
    for (Vec2 v : k.vertices()) r = std::max(r, v.norm());
    return r;
}

} // namespace walkhull
