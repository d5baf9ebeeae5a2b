#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "walkhull/calipers.hpp"
#include "walkhull/incremental_hull.hpp"
#include "walkhull/path.hpp"

namespace walkhull {

/// Hull functionals of one trajectory prefix S_0..S_n.
struct CheckpointRow {
    std::int64_t n = 0;
    double perimeter = 0.0;
    double diameter = 0.0;
    double inradius = 0.0;
    double s_norm = 0.0;
    std::optional<double> x_proj; // S_n . mu_hat, drift case only
    std::optional<double> ratio;  // perimeter / diameter when diameter > 0
    std::int64_t witness_lo = 0;  // walk-step indices of a farthest pair
    std::int64_t witness_hi = 0;
};

struct FunctionalTrace {
    std::vector<CheckpointRow> rows;
};

/// Streaming hull-functional evaluator: feed positions one by one, snapshot at
/// checkpoints. trace() and the Monte Carlo drivers share this path, so the
/// incremental values are the values everything else sees.
class TrajectoryFunctionals {
public:
    void reset() {
        hull_.clear();
        pos_ = {0.0, 0.0};
        step_ = -1;
    }

    /// Returns true when the hull changed.
    bool feed(Vec2 position, std::int64_t step) {
        const bool changed = hull_.insert(position, step);
        pos_ = position;
        step_ = step;
        return changed;
    }

    std::int64_t current_step() const { return step_; }
    Vec2 current_position() const { return pos_; }
    const IncrementalHull& hull() const { return hull_; }

    CheckpointRow snapshot(const std::optional<Vec2>& mu_hat) const {
        CheckpointRow row;
        row.n = step_;
        const ConvexPolygon k = hull_.polygon();
        row.perimeter = perimeter(k);
        const DiameterResult d = diameter(k);
        row.diameter = d.value;
        const auto steps = hull_.vertex_steps();
        row.witness_lo = steps[d.i];
        row.witness_hi = steps[d.j];
        if (row.witness_lo > row.witness_hi) std::swap(row.witness_lo, row.witness_hi);
        row.inradius = inradius_at_origin(k);
        row.s_norm = pos_.norm();
        if (mu_hat) row.x_proj = dot(pos_, *mu_hat);
        if (d.value > 0.0) row.ratio = row.perimeter / d.value;
        return row;
    }

private:
    IncrementalHull hull_;
    Vec2 pos_{0.0, 0.0};
    std::int64_t step_ = -1;
};

/// Functionals of `path` at each requested checkpoint (sorted, within [0, n]).
inline FunctionalTrace trace(const Path& path, const std::vector<std::int64_t>& checkpoints,
                             const std::optional<Vec2>& mu_hat = std::nullopt) {
    const std::int64_t n = path.steps();
    if (n < 0 || path.positions.front() != Vec2{0.0, 0.0})
        throw std::invalid_argument("trace: path must start at the origin");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 0 || checkpoints[i] > n)
            throw std::invalid_argument("trace: checkpoint outside [0, n]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("trace: checkpoints must be strictly increasing");
    }

    FunctionalTrace out;
    out.rows.reserve(checkpoints.size());
    TrajectoryFunctionals fn;
    fn.reset();
    std::size_t next = 0;
    for (std::int64_t k = 0; k <= n && next < checkpoints.size(); ++k) {
        fn.feed(path.positions[static_cast<std::size_t>(k)], k);
        if (checkpoints[next] == k) {
            out.rows.push_back(fn.snapshot(mu_hat));
            ++next;
        }
    }
    return out;
}

/// Default checkpoint schedule: every step up to 1024, then a geometric grid
/// (powers of two times {1, 1.25, 1.5, 1.75}), always ending at n.
inline std::vector<std::int64_t> default_checkpoints(std::int64_t n) {
    std::vector<std::int64_t> cps;
    for (std::int64_t k = 0; k <= std::min<std::int64_t>(n, 1024); ++k) cps.push_back(k);
    static constexpr double multipliers[] = {1.0, 1.25, 1.5, 1.75};
    for (std::int64_t p = 1024; p <= n && p > 0; p *= 2) {
        for (double m : multipliers) {
            const auto c = static_cast<std::int64_t>(static_cast<double>(p) * m);
            if (c > 1024 && c <= n) cps.push_back(c);
        }
    }
    if (n > 1024 && cps.back() != n) cps.push_back(n);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    return cps;
}

} // namespace walkhull
