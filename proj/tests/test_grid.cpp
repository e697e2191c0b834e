#include "gridpath/grid.hpp"

#include "doctest.h"

#include <stdexcept>

#include <set>

using namespace gridpath;

TEST_CASE("GridSpec validation") {
    CHECK_NOTHROW(GridSpec({3, 3, 3}));
    CHECK_NOTHROW(GridSpec({1, 5}));
    CHECK_THROWS_AS(GridSpec({3, 2}), std::invalid_argument);     // unsorted
    CHECK_THROWS_AS(GridSpec({0, 2}), std::invalid_argument);     // extent < 1
    CHECK_THROWS_AS(GridSpec({}), std::invalid_argument);         // empty
    CHECK(GridSpec(sorted_dims({5, 2, 3})) == GridSpec({2, 3, 5}));
}

TEST_CASE("enumerate_points") {
    const auto pts22 = enumerate_points(GridSpec({2, 2}));
    REQUIRE(pts22.size() == 4);
    CHECK(pts22[0] == PointK{0, 0});
    CHECK(pts22[1] == PointK{0, 1});
    CHECK(pts22[2] == PointK{1, 0});
    CHECK(pts22[3] == PointK{1, 1});

    CHECK(enumerate_points(GridSpec({3, 3, 3})).size() == 27);

    const auto pts15 = enumerate_points(GridSpec({1, 5}));
    REQUIRE(pts15.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(pts15[i] == PointK{0, double(i)});
}

TEST_CASE("enumerate_points is duplicate-free and inside the MAABB") {
    for (const auto& dims : {std::vector<int>{2, 4}, {1, 2, 3}, {2, 2, 2, 2}}) {
        const GridSpec g(dims);
        const auto pts = enumerate_points(g);
        std::set<std::vector<double>> seen;
        const Box b = maabb(g);
        for (const auto& p : pts) {
            CHECK(seen.insert(p.coords()).second);
            CHECK(box_contains_point(b, p, 0.0 + 1e-12));
        }
        CHECK(pts.size() == static_cast<std::size_t>(g.point_count()));
    }
}

TEST_CASE("maabb and raabb") {
    const GridSpec g33({3, 3});
    CHECK(maabb(g33).lo == PointK{0, 0});
    CHECK(maabb(g33).hi == PointK{2, 2});
    CHECK(raabb(g33).hi == PointK{3, 3});

    CHECK(maabb(GridSpec({2, 2, 2})).hi == PointK{1, 1, 1});

    // maabb nested in raabb for every spec
    for (const auto& dims : {std::vector<int>{1, 1}, {2, 3}, {3, 3, 4}}) {
        const GridSpec g(dims);
        const Box inner = maabb(g), outer = raabb(g);
        for (std::size_t i = 0; i < g.rank(); ++i) {
            CHECK(inner.lo[i] >= outer.lo[i]);
            CHECK(inner.hi[i] < outer.hi[i]);
        }
    }
}

TEST_CASE("corner_set") {
    auto as_set = [](const CornerSet& v) {
        std::set<std::vector<double>> s;
        for (const auto& p : v.points) s.insert(p.coords());
        return s;
    };
    CHECK(as_set(corner_set(GridSpec({3, 3}))) ==
          std::set<std::vector<double>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    CHECK(corner_set(GridSpec({3, 3, 3})).points.size() == 8);
    CHECK(as_set(corner_set(GridSpec({1, 3}))) == std::set<std::vector<double>>{{0, 0}, {0, 2}});

    // corner set is a subset of the grid
    const GridSpec g({2, 3, 4});
    const auto pts = enumerate_points(g);
    std::set<std::vector<double>> grid_set;
    for (const auto& p : pts) grid_set.insert(p.coords());
    for (const auto& c : corner_set(g).points) CHECK(grid_set.count(c.coords()) == 1);
}

TEST_CASE("is_grid_point") {
    const GridSpec g({3, 3});
    CHECK(is_grid_point(g, {2, 2}));
    CHECK(is_grid_point(g, {2 + 1e-12, 1}));
    CHECK_FALSE(is_grid_point(g, {0.5, 1}));
    CHECK_FALSE(is_grid_point(g, {3, 0}));  // outside extents
    CHECK_FALSE(is_grid_point(g, {1, 1, 1})); // wrong dimension
    CHECK(grid_coords({2 + 1e-12, 0}) == std::vector<int>{2, 0});
}
