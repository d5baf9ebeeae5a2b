#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "walkhull/incremental_hull.hpp"

using namespace walkhull;

TEST_CASE("incremental hull equals batch hull on random streams") {
    RandomStream rng(9100, 0);
    for (int rep = 0; rep < 150; ++rep) {
        IncrementalHull inc;
        std::vector<Vec2> seen;
        const std::size_t count = 1 + rng.next_u64() % 60;
        const bool lattice = (rep % 2) == 0;
        const auto pts = lattice ? testutil::random_lattice_points(rng, count, 4)
                                 : testutil::random_points(rng, count, -1.0, 1.0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            inc.insert(pts[i], static_cast<std::int64_t>(i));
            seen.push_back(pts[i]);
            REQUIRE(inc.polygon().vertices() == convex_hull(seen).vertices());
        }
        REQUIRE(inc.vertex_count() == inc.polygon().count());
    }
}

TEST_CASE("incremental hull handles collinear growth") {
    IncrementalHull inc;
    inc.insert({0, 0}, 0);
    inc.insert({1, 0}, 1);
    inc.insert({2, 0}, 2);
    CHECK(inc.polygon().vertices() == std::vector<Vec2>{{0, 0}, {2, 0}});
    inc.insert({1, 0}, 3); // on the segment
    CHECK(inc.vertex_count() == 2);
    inc.insert({1, 1}, 4);
    CHECK(inc.polygon().vertices() == std::vector<Vec2>{{0, 0}, {2, 0}, {1, 1}});
    CHECK(inc.vertex_steps() == std::vector<std::int64_t>{0, 2, 4});
}

TEST_CASE("incremental hull keeps earliest step for repeated points") {
    IncrementalHull inc;
    inc.insert({0, 0}, 0);
    inc.insert({3, 0}, 1);
    inc.insert({0, 3}, 2);
    inc.insert({0, 0}, 5);
    inc.insert({3, 0}, 9);
    CHECK(inc.vertex_steps() == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("contains agrees with membership of the batch hull") {
    RandomStream rng(9100, 1);
    for (int rep = 0; rep < 100; ++rep) {
        const auto pts = testutil::random_lattice_points(rng, 1 + rng.next_u64() % 30, 3);
        IncrementalHull inc;
        for (std::size_t i = 0; i < pts.size(); ++i) inc.insert(pts[i], static_cast<std::int64_t>(i));
        const auto poly = inc.polygon();
        for (int q = 0; q < 50; ++q) {
            const auto probe = testutil::random_lattice_points(rng, 1, 4)[0];
            const bool inside = inc.contains(probe);
            // oracle: adding the probe changes nothing iff it was inside
            const bool oracle = [&] {
                auto all = pts;
                all.push_back(probe);
                return convex_hull(all).vertices() == poly.vertices();
            }();
            REQUIRE(inside == oracle);
        }
    }
}
