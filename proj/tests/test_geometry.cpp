#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "wsrn/geometry.hpp"
#include "wsrn/rng.hpp"

using namespace wsrn;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {0, 0}) == 0.0);
    CHECK(distance({0, 0}, {0.3, 0.4}) == doctest::Approx(0.5));
    CHECK(distance({0.2, 0.2}, {0.9, 0.2}) == doctest::Approx(0.7));
}

TEST_CASE("distance is a metric on random triples") {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Point a{rng.uniform01(), rng.uniform01()};
        const Point b{rng.uniform01(), rng.uniform01()};
        const Point c{rng.uniform01(), rng.uniform01()};
        CHECK(distance(a, b) >= 0.0);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-15);
    }
}

TEST_CASE("search radius boundary is inclusive") {
    CHECK(in_search_radius({0.5, 0.5}, {0.5, 0.5}, 0.1));
    CHECK(in_search_radius({0.5, 0.7}, {0.5, 0.5}, 0.2));
    CHECK_FALSE(in_search_radius({0.5, 0.71}, {0.5, 0.5}, 0.2));
}

TEST_CASE("proper segment intersection") {
    CHECK(segments_properly_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
    CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    // touching endpoint only
    CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {1, 0}, {2, 0}));
    // collinear overlap
    CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {0.5, 0}, {2, 0}));
    // T-touch in the middle
    CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {0.5, 0}, {0.5, 1}));
}

TEST_CASE("intersection symmetry under swaps and reversals") {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const Point a1{rng.uniform01(), rng.uniform01()}, a2{rng.uniform01(), rng.uniform01()};
        const Point b1{rng.uniform01(), rng.uniform01()}, b2{rng.uniform01(), rng.uniform01()};
        const bool x = segments_properly_intersect(a1, a2, b1, b2);
        CHECK(x == segments_properly_intersect(b1, b2, a1, a2));
        CHECK(x == segments_properly_intersect(a2, a1, b1, b2));
        CHECK(x == segments_properly_intersect(a1, a2, b2, b1));
    }
}

TEST_CASE("intersection point lies on both segments") {
    const auto x = segment_intersection({0, 0}, {1, 1}, {0, 1}, {1, 0});
    REQUIRE(x.has_value());
    CHECK(x->x == doctest::Approx(0.5));
    CHECK(x->y == doctest::Approx(0.5));
    CHECK_FALSE(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}).has_value());
}

TEST_CASE("next_face_neighbor hand-rule examples") {
    const Point cur{0.5, 0.5};
    SUBCASE("arrived from due west, north and south available: right hand goes north") {
        const std::vector<Point> nbrs{{0.5, 0.6}, {0.5, 0.4}, {0.4, 0.5}}; // N, S, W(sender)
        const double ref = angle_of(cur, {0.4, 0.5});
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Right) == 0);
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Left) == 1);
    }
    SUBCASE("initial step toward an eastern destination: right hand goes SE") {
        const std::vector<Point> nbrs{{0.6, 0.6}, {0.6, 0.4}}; // NE, SE
        const double ref = angle_of(cur, {1.0, 0.5});
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Right) == 1);
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Left) == 0);
    }
    SUBCASE("single neighbor returns itself (dead end)") {
        const std::vector<Point> nbrs{{0.4, 0.5}};
        const double ref = angle_of(cur, nbrs[0]);
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Right) == 0);
    }
}

TEST_CASE("right and left hands are the ends of the same clockwise ordering") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Point cur{rng.uniform01(), rng.uniform01()};
        const int k = 2 + static_cast<int>(rng.uniform_index(6));
        std::vector<Point> nbrs;
        for (int i = 0; i < k; ++i) nbrs.push_back({rng.uniform01(), rng.uniform01()});
        const double ref = rng.uniform01() * 6.283185307179586;

        // Oracle: sort neighbors by clockwise angle from the reference.
        auto cw = [&](const Point& p) {
            double d = std::fmod(ref - angle_of(cur, p), 6.283185307179586);
            if (d < 0) d += 6.283185307179586;
            if (d == 0) d = 6.283185307179586;
            return d;
        };
        std::vector<std::size_t> order(nbrs.size());
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cw(nbrs[a]) < cw(nbrs[b]); });

        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Right) == order.front());
        CHECK(next_face_neighbor(cur, ref, nbrs, HandRule::Left) == order.back());
    }
}
