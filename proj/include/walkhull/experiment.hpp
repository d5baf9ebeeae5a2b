#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkhull/distribution.hpp"
#include "walkhull/polygon.hpp"
#include "walkhull/serde.hpp"

namespace walkhull {

/// Unit-diameter comparison shapes. The disc is a regular 256-gon of diameter
/// one; its distance to the true disc, 0.5 * (1 - cos(pi/256)), rides along in
/// every reported Hausdorff interval.
struct TargetShape {
    enum class Kind { UnitSegment, UnitDisc, UnitSquare };

    Kind kind;
    std::string name;
    ConvexPolygon polygon;

    static TargetShape unit_segment(double theta) {
        return {Kind::UnitSegment, "segment",
                convex_hull(std::vector<Vec2>{{0.0, 0.0}, unit_vector(theta)})};
    }
    static TargetShape unit_disc() {
        constexpr double pi = 3.14159265358979323846;
        std::vector<Vec2> pts;
        for (int k = 0; k < 256; ++k) pts.push_back(unit_vector(2 * pi * k / 256) * 0.5);
        return {Kind::UnitDisc, "disc", convex_hull(pts)};
    }
    static TargetShape unit_square() {
        const double s = 1.0 / std::sqrt(2.0);
        return {Kind::UnitSquare, "square",
                convex_hull(std::vector<Vec2>{{0, 0}, {s, 0}, {s, s}, {0, s}})};
    }
};

/// Everything a run needs, thresholds included, so a (spec, build) pair
/// reproduces results byte for byte.
struct ExperimentSpec {
    std::string experiment;
    IncrementDistribution dist = IncrementDistribution::lattice();
    std::vector<std::int64_t> n_grid;
    std::int64_t trials = 1;
    std::uint64_t seed = 1;
    int threads = 0; // 0 = hardware parallelism
    std::int64_t inner = 64;
    std::size_t hausdorff_m = 4096;
    std::size_t cauchy_m = 8192;
    std::size_t projection_m = 8192;
    double segment_theta = 0.0;
    double witness_beta = 0.9;
    std::map<std::string, double> thresholds;

    std::int64_t n_max() const { return n_grid.empty() ? 0 : n_grid.back(); }

    double threshold(const std::string& key) const {
        const auto it = thresholds.find(key);
        if (it == thresholds.end())
            throw std::invalid_argument("missing threshold \"" + key + "\" for " + experiment);
        return it->second;
    }

    void validate() const {
        if (n_grid.empty()) throw std::invalid_argument("spec: n_grid must be non-empty");
        for (std::size_t i = 0; i < n_grid.size(); ++i) {
            if (n_grid[i] < 1) throw std::invalid_argument("spec: n_grid entries must be >= 1");
            if (i > 0 && n_grid[i] <= n_grid[i - 1])
                throw std::invalid_argument("spec: n_grid must be strictly increasing");
        }
        if (trials < 1) throw std::invalid_argument("spec: trials must be >= 1");
        if (inner < 1) throw std::invalid_argument("spec: inner must be >= 1");
        if (threads < 0) throw std::invalid_argument("spec: threads must be >= 0");
        if (!(witness_beta > 0.0 && witness_beta < 1.0))
            throw std::invalid_argument("spec: witness_beta must lie in (0, 1)");
    }
};

struct ResultRow {
    std::int64_t n = 0;
    std::string statistic;
    double value = 0.0;
    std::optional<double> se;
};

struct AssertionResult {
    std::string name;
    bool pass = false;
    std::string detail; // value, window, tolerance
};

struct ExperimentResult {
    std::string name;
    std::vector<ResultRow> rows;
    std::vector<AssertionResult> assertions;
    double wall_seconds = 0.0;
    ordered_json resolved_config;

    bool passed() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }

    void add_row(std::int64_t n, std::string stat, double value,
                 std::optional<double> se = std::nullopt) {
        rows.push_back({n, std::move(stat), value, se});
    }

    void assert_that(std::string name, bool pass, std::string detail) {
        assertions.push_back({std::move(name), pass, std::move(detail)});
    }
};

inline ordered_json spec_to_json(const ExperimentSpec& s) {
    ordered_json j;
    j["experiment"] = s.experiment;
    j["dist"] = distribution_to_json(s.dist);
    j["n_grid"] = s.n_grid;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["threads"] = s.threads;
    j["inner"] = s.inner;
    j["grids"] = {{"hausdorff_m", s.hausdorff_m},
                  {"cauchy_m", s.cauchy_m},
                  {"projection_m", s.projection_m}};
    j["segment_theta"] = s.segment_theta;
    j["witness_beta"] = s.witness_beta;
    ordered_json thr = ordered_json::object();
    for (const auto& [k, v] : s.thresholds) thr[k] = v;
    j["thresholds"] = std::move(thr);
    return j;
}

} // namespace walkhull
