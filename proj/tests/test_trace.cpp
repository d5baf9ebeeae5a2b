#include <catch2/catch_amalgamated.hpp>

#include "walkhull/trace.hpp"

using namespace walkhull;
using Catch::Approx;

namespace {
// From-scratch oracle: rebuild the prefix hull per checkpoint.
CheckpointRow scratch_row(const Path& path, std::int64_t n, const std::optional<Vec2>& mu_hat) {
    const std::vector<Vec2> prefix(path.positions.begin(), path.positions.begin() + n + 1);
    const auto hull = convex_hull(prefix);
    CheckpointRow row;
    row.n = n;
    row.perimeter = perimeter(hull);
    row.diameter = diameter(hull).value;
    row.inradius = inradius_at_origin(hull);
    row.s_norm = prefix.back().norm();
    if (mu_hat) row.x_proj = dot(prefix.back(), *mu_hat);
    if (row.diameter > 0) row.ratio = row.perimeter / row.diameter;
    return row;
}
} // namespace

TEST_CASE("trace on the hand-checked diagonal start") {
    Path p;
    p.positions = {{0, 0}, {1, 1}, {2, 0}};
    const auto tr = trace(p, {0, 1, 2});
    REQUIRE(tr.rows.size() == 3);

    CHECK(tr.rows[0].perimeter == 0.0);
    CHECK(tr.rows[0].diameter == 0.0);
    CHECK(tr.rows[0].inradius == 0.0);
    CHECK_FALSE(tr.rows[0].ratio.has_value());

    CHECK(tr.rows[2].perimeter == Approx(2.0 + 2.0 * std::sqrt(2.0)));
    CHECK(tr.rows[2].diameter == Approx(2.0));
    CHECK(tr.rows[2].inradius == 0.0);
    CHECK(tr.rows[2].s_norm == Approx(2.0));
    CHECK(tr.rows[2].witness_lo == 0);
    CHECK(tr.rows[2].witness_hi == 2);
}

TEST_CASE("trace matches from-scratch recomputation") {
    const auto dists = {IncrementDistribution::gaussian({1, 0}, 1.0),
                        IncrementDistribution::lattice(),
                        IncrementDistribution::degenerate_diag()};
    std::uint64_t stream = 0;
    for (const auto& dist : dists) {
        const auto stats = dist.moments();
        const auto path = sample_path(dist, 200, RandomStream(555, stream++));
        std::vector<std::int64_t> cps;
        for (std::int64_t k = 0; k <= 200; k += 7) cps.push_back(k);
        const auto tr = trace(path, cps, stats.mu_hat);
        REQUIRE(tr.rows.size() == cps.size());
        for (std::size_t i = 0; i < cps.size(); ++i) {
            const auto want = scratch_row(path, cps[i], stats.mu_hat);
            const auto& got = tr.rows[i];
            CHECK(got.n == want.n);
            CHECK(got.perimeter == Approx(want.perimeter).epsilon(1e-9).margin(1e-12));
            CHECK(got.diameter == Approx(want.diameter).epsilon(1e-9).margin(1e-12));
            CHECK(got.inradius == Approx(want.inradius).epsilon(1e-9).margin(1e-12));
            CHECK(got.s_norm == Approx(want.s_norm).margin(1e-12));
            CHECK(got.x_proj.has_value() == want.x_proj.has_value());
            if (got.x_proj) CHECK(*got.x_proj == Approx(*want.x_proj).margin(1e-12));
        }
    }
}

TEST_CASE("trace rows satisfy the functional invariants") {
    const auto dist = IncrementDistribution::lattice();
    const auto path = sample_path(dist, 1000, RandomStream(556, 0));
    const auto cps = default_checkpoints(1000);
    const auto tr = trace(path, cps);
    constexpr double pi = 3.14159265358979323846;
    CheckpointRow prev;
    for (const auto& row : tr.rows) {
        CHECK(row.perimeter >= prev.perimeter - 1e-12);
        CHECK(row.diameter >= prev.diameter - 1e-12);
        CHECK(row.inradius >= prev.inradius - 1e-12);
        CHECK(row.s_norm <= row.diameter + 1e-12);
        if (row.ratio) {
            CHECK(*row.ratio >= 2.0 - 1e-9);
            CHECK(*row.ratio <= pi + 1e-9);
        }
        prev = row;
    }
}

TEST_CASE("trace validates checkpoints") {
    Path p;
    p.positions = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(trace(p, {0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(trace(p, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(trace(p, {-1}), std::invalid_argument);
    Path bad;
    bad.positions = {{1, 0}};
    CHECK_THROWS_AS(trace(bad, {0}), std::invalid_argument);
}

TEST_CASE("default checkpoint schedule") {
    const auto small = default_checkpoints(10);
    REQUIRE(small.size() == 11);
    CHECK(small.front() == 0);
    CHECK(small.back() == 10);

    const auto big = default_checkpoints(5000);
    CHECK(big.back() == 5000);
    CHECK(std::is_sorted(big.begin(), big.end()));
    CHECK(std::adjacent_find(big.begin(), big.end()) == big.end());
    // geometric beyond 1024
    CHECK(std::find(big.begin(), big.end(), 2048) != big.end());
    CHECK(std::find(big.begin(), big.end(), 2560) != big.end());
}
