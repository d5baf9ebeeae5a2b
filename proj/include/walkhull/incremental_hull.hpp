#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "walkhull/polygon.hpp"

namespace walkhull {

/// Convex hull under point insertion. Two lexicographically sorted monotone
/// chains (lower keeps strict left turns, upper strict right turns) sharing
/// their end vertices. Membership is a binary search per chain; an exterior
/// point is spliced in and neighbours that lose strict convexity are popped,
/// so each point is removed at most once over the whole walk.
///
/// Each vertex remembers the step index of the walk point that created it;
/// coincident points keep the earliest step.
class IncrementalHull {
public:
    struct Node {
        Vec2 p;
        std::int64_t step;
    };

    void clear() {
        lower_.clear();
        upper_.clear();
    }

    bool empty() const { return lower_.empty(); }

    std::size_t vertex_count() const {
        if (lower_.empty()) return 0;
        if (lower_.size() == 1) return 1;
        return lower_.size() + upper_.size() - 2;
    }

    /// Returns true when the hull changed.
    bool insert(Vec2 p, std::int64_t step) {
        if (lower_.empty()) {
            lower_.push_back({p, step});
            upper_.push_back({p, step});
            return true;
        }
        const Vec2 front = lower_.front().p;
        const Vec2 back = lower_.back().p;
        if (p == front || p == back) return false;

        if (lex_less(back, p)) {
            lower_.push_back({p, step});
            upper_.push_back({p, step});
            repair<true>(lower_, lower_.size() - 1);
            repair<false>(upper_, upper_.size() - 1);
            return true;
        }
        if (lex_less(p, front)) {
            lower_.insert(lower_.begin(), {p, step});
            upper_.insert(upper_.begin(), {p, step});
            repair<true>(lower_, 0);
            repair<false>(upper_, 0);
            return true;
        }

        // p is lex-between the shared endpoints; locate its edge on each chain.
        const std::size_t li = locate(lower_, p);
        if (lower_[li].p == p) return false;
        const Vec2 la = lower_[li].p;
        const double below = cross(lower_[li + 1].p - la, p - la);
        if (below < 0.0) {
            lower_.insert(lower_.begin() + static_cast<std::ptrdiff_t>(li) + 1, {p, step});
            repair<true>(lower_, li + 1);
            return true;
        }

        const std::size_t ui = locate(upper_, p);
        if (upper_[ui].p == p) return false;
        const Vec2 ua = upper_[ui].p;
        const double above = cross(upper_[ui + 1].p - ua, p - ua);
        if (above > 0.0) {
            upper_.insert(upper_.begin() + static_cast<std::ptrdiff_t>(ui) + 1, {p, step});
            repair<false>(upper_, ui + 1);
            return true;
        }
        return false; // inside or on the boundary
    }

    bool contains(Vec2 p) const {
        if (lower_.empty()) return false;
        if (p == lower_.front().p || p == lower_.back().p) return true;
        if (lex_less(p, lower_.front().p) || lex_less(lower_.back().p, p)) return false;
        const std::size_t li = locate(lower_, p);
        if (lower_[li].p == p) return true;
        const Vec2 la = lower_[li].p;
        if (cross(lower_[li + 1].p - la, p - la) < 0.0) return false;
        const std::size_t ui = locate(upper_, p);
        if (upper_[ui].p == p) return true;
        const Vec2 ua = upper_[ui].p;
        return cross(upper_[ui + 1].p - ua, p - ua) <= 0.0;
    }

    /// Canonical CCW polygon (starts at the lex-min vertex).
    ConvexPolygon polygon() const {
        std::vector<Vec2> ccw;
        emit([&](const Node& n) { ccw.push_back(n.p); });
        return ConvexPolygon::unchecked(std::move(ccw));
    }

    /// Walk-step indices aligned with polygon().vertices().
    std::vector<std::int64_t> vertex_steps() const {
        std::vector<std::int64_t> steps;
        emit([&](const Node& n) { steps.push_back(n.step); });
        return steps;
    }

private:
    template <typename F>
    void emit(F&& f) const {
        for (const Node& n : lower_) f(n);
        if (upper_.size() > 2)
            for (std::size_t i = upper_.size() - 1; i-- > 1;) f(upper_[i]);
    }

    static std::size_t locate(const std::vector<Node>& chain, Vec2 p) {
        auto it = std::upper_bound(chain.begin(), chain.end(), p,
                                   [](Vec2 q, const Node& n) { return lex_less(q, n.p); });
        return static_cast<std::size_t>(it - chain.begin()) - 1;
    }

    // Restore strict convexity around the node just inserted at position k.
    template <bool Lower>
    static void repair(std::vector<Node>& chain, std::size_t k) {
        auto convex = [](Vec2 a, Vec2 b, Vec2 c) {
            const double t = cross(b - a, c - b);
            return Lower ? t > 0.0 : t < 0.0;
        };
        while (k >= 2 && !convex(chain[k - 2].p, chain[k - 1].p, chain[k].p)) {
            chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(k) - 1);
            --k;
        }
        while (k + 2 < chain.size() && !convex(chain[k].p, chain[k + 1].p, chain[k + 2].p))
            chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    }

    std::vector<Node> lower_, upper_;
};

} // namespace walkhull
