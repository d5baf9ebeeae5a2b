#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "walkhull/calipers.hpp"
#include "walkhull/polygon.hpp"
#include "walkhull/vec2.hpp"

using namespace walkhull;
using Catch::Approx;

namespace {
constexpr double pi = 3.14159265358979323846;

ConvexPolygon square01() {
    return convex_hull(std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}
} // namespace

TEST_CASE("unit_vector basics") {
    CHECK(unit_vector(0.0) == Vec2{1.0, 0.0});
    const Vec2 up = unit_vector(pi / 2);
    CHECK(std::abs(up.x) < 1e-15);
    CHECK(up.y == Approx(1.0).epsilon(1e-15));
    const Vec2 diag = unit_vector(pi / 4);
    CHECK(diag.x == Approx(std::sqrt(2.0) / 2).margin(1e-15));
    CHECK(diag.y == Approx(std::sqrt(2.0) / 2).margin(1e-15));
    CHECK(std::abs(diag.norm() - 1.0) < 4e-16);
    CHECK_THROWS_AS(unit_vector(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(unit_vector(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("convex_hull degenerate inputs") {
    const auto pt = convex_hull(std::vector<Vec2>{{2, 3}});
    CHECK(pt.is_point());
    CHECK(pt.vertices() == std::vector<Vec2>{{2, 3}});

    const auto rep = convex_hull(std::vector<Vec2>{{1, 1}, {1, 1}, {1, 1}});
    CHECK(rep.is_point());

    const auto seg = convex_hull(std::vector<Vec2>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(seg.is_segment());
    CHECK(seg.vertices() == std::vector<Vec2>{{0, 0}, {2, 0}});

    CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{}), std::invalid_argument);
    CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{{0, 0}, {std::nan(""), 1}}),
                    std::invalid_argument);
}

TEST_CASE("convex_hull removes interior points and orders CCW") {
    const auto sq = convex_hull(std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(sq.vertices() == std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("convex_hull matches half-plane oracle on random sets") {
    RandomStream rng(20240801, 1);
    for (int rep = 0; rep < 400; ++rep) {
        const std::size_t count = 3 + rng.next_u64() % 12;
        const auto pts = testutil::random_points(rng, count);
        auto mine = convex_hull(pts).vertices();
        std::sort(mine.begin(), mine.end(), lex_less);
        const auto oracle = testutil::hull_vertices_oracle(pts);
        REQUIRE(mine == oracle);
    }
    // lattice points exercise exact collinearity
    for (int rep = 0; rep < 400; ++rep) {
        const std::size_t count = 3 + rng.next_u64() % 12;
        const auto pts = testutil::random_lattice_points(rng, count, 3);
        auto mine = convex_hull(pts).vertices();
        std::sort(mine.begin(), mine.end(), lex_less);
        const auto oracle = testutil::hull_vertices_oracle(pts);
        REQUIRE(mine == oracle);
    }
}

TEST_CASE("perimeter examples") {
    CHECK(perimeter(square01()) == Approx(4.0));
    const auto seg = convex_hull(std::vector<Vec2>{{0, 0}, {3, 4}});
    CHECK(perimeter(seg) == Approx(10.0));
    const auto tri = convex_hull(std::vector<Vec2>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(perimeter(tri) == Approx(2.0 + std::sqrt(2.0)));
    CHECK(perimeter(convex_hull(std::vector<Vec2>{{5, 5}})) == 0.0);
}

TEST_CASE("support function") {
    const auto sq = square01();
    CHECK(support(sq, {1, 0}) == Approx(1.0));
    const double s = std::sqrt(2.0) / 2;
    CHECK(support(sq, {s, s}) == Approx(std::sqrt(2.0)));
    const auto pt = convex_hull(std::vector<Vec2>{{2, -3}});
    CHECK(support(pt, {s, s}) == Approx(2 * s - 3 * s));
    CHECK_THROWS_AS(support(sq, {1, 1}), std::invalid_argument);
}

TEST_CASE("diameter via rotating calipers") {
    const auto sq = square01();
    const auto d = diameter(sq);
    CHECK(d.value == Approx(std::sqrt(2.0)));
    CHECK(d.i == 0);
    CHECK(d.j == 2); // lowest-index diagonal

    std::vector<Vec2> hex;
    for (int k = 0; k < 6; ++k) hex.push_back(unit_vector(2 * pi * k / 6));
    CHECK(diameter(convex_hull(hex)).value == Approx(2.0));

    CHECK(diameter(convex_hull(std::vector<Vec2>{{1, 2}})).value == 0.0);
    CHECK(diameter(convex_hull(std::vector<Vec2>{{0, 0}, {3, 4}})).value == Approx(5.0));
}

TEST_CASE("diameter matches all-pairs brute force") {
    RandomStream rng(20240801, 2);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t count = 3 + rng.next_u64() % 62;
        const auto pts = testutil::random_points(rng, count);
        const double mine = diameter(convex_hull(pts)).value;
        const double brute = testutil::all_pairs_diameter(pts);
        REQUIRE(mine == Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("inradius at origin") {
    const auto big = convex_hull(std::vector<Vec2>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(inradius_at_origin(big) == Approx(1.0));
    CHECK(inradius_at_origin(square01()) == 0.0); // origin on the boundary
    const auto tri = convex_hull(std::vector<Vec2>{{-1, -1}, {3, -1}, {-1, 3}});
    CHECK(inradius_at_origin(tri) == Approx(1.0)); // min(1, 1, sqrt(2))
    CHECK(inradius_at_origin(convex_hull(std::vector<Vec2>{{0, 0}, {1, 1}})) == 0.0);
    const auto off = convex_hull(std::vector<Vec2>{{1, 1}, {2, 1}, {1, 2}});
    CHECK(inradius_at_origin(off) == 0.0); // origin outside
}

TEST_CASE("scale_unit_diameter") {
    const auto sq = scale_unit_diameter(square01());
    CHECK(diameter(sq).value == Approx(1.0).epsilon(1e-12));
    CHECK(sq.vertices()[1].x == Approx(1.0 / std::sqrt(2.0)));

    const auto seg = scale_unit_diameter(convex_hull(std::vector<Vec2>{{0, 0}, {0, 5}}));
    CHECK(seg.vertices() == std::vector<Vec2>{{0, 0}, {0, 1}});

    CHECK_THROWS_AS(scale_unit_diameter(convex_hull(std::vector<Vec2>{{1, 1}})),
                    std::domain_error);
}

TEST_CASE("ratio bounds: 2 <= L/D <= pi") {
    RandomStream rng(20240801, 3);
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t count = 2 + rng.next_u64() % 30;
        const auto k = convex_hull(testutil::random_points(rng, count));
        const double d = diameter(k).value;
        if (d <= 0.0) continue;
        const double ratio = perimeter(k) / d;
        REQUIRE(ratio >= 2.0 - 1e-9);
        REQUIRE(ratio <= pi + 1e-9);
    }
}

TEST_CASE("hull idempotence and vertex validation") {
    RandomStream rng(20240801, 4);
    for (int rep = 0; rep < 200; ++rep) {
        const auto k = convex_hull(testutil::random_points(rng, 2 + rng.next_u64() % 40));
        const auto again = convex_hull(k.vertices());
        REQUIRE(again.vertices() == k.vertices());
        CHECK_NOTHROW(ConvexPolygon(k.vertices()));
    }
    CHECK_THROWS_AS(ConvexPolygon(std::vector<Vec2>{{0, 0}, {0, 1}, {1, 0}}), // CW order
                    std::invalid_argument);
}

TEST_CASE("adding a point never shrinks hull functionals") {
    RandomStream rng(20240801, 5);
    for (int rep = 0; rep < 200; ++rep) {
        auto pts = testutil::random_points(rng, 4 + rng.next_u64() % 20, -1.0, 1.0);
        const auto before = convex_hull(pts);
        pts.push_back({2 * rng.next_unit() - 1, 2 * rng.next_unit() - 1});
        const auto after = convex_hull(pts);
        REQUIRE(perimeter(after) >= perimeter(before) - 1e-12);
        REQUIRE(diameter(after).value >= diameter(before).value - 1e-12);
        REQUIRE(inradius_at_origin(after) >= inradius_at_origin(before) - 1e-12);
    }
}
