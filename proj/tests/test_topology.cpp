#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "test_support.hpp"
#include "wsrn/topology.hpp"

using namespace wsrn;

namespace {

// Full-scan Gabriel oracle: witness search over every node, not just UDG
// neighbors of the endpoint.
std::vector<std::vector<NodeId>> gabriel_brute(const std::vector<Point>& pts, double r) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<NodeId>> gg(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (distance(pts[u], pts[v]) > r) continue;
            const Point m{(pts[u].x + pts[v].x) / 2, (pts[u].y + pts[v].y) / 2};
            const double half = distance(pts[u], pts[v]) / 2;
            bool witnessed = false;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (distance(m, pts[w]) < half) witnessed = true;
            }
            if (!witnessed) {
                gg[u].push_back(v);
                gg[v].push_back(u);
            }
        }
    return gg;
}

// Prim's MST over the UDG edge set; returns edges or empty if disconnected.
std::vector<std::pair<NodeId, NodeId>> udg_mst(const std::vector<Point>& pts, double r) {
    const int n = static_cast<int>(pts.size());
    std::vector<char> in(n, 0);
    std::vector<double> best(n, 1e300);
    std::vector<NodeId> from(n, -1);
    in[0] = 1;
    for (int v = 1; v < n; ++v)
        if (distance(pts[0], pts[v]) <= r) {
            best[v] = distance(pts[0], pts[v]);
            from[v] = 0;
        }
    std::vector<std::pair<NodeId, NodeId>> mst;
    for (int it = 1; it < n; ++it) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!in[v] && best[v] < 1e299 && (pick < 0 || best[v] < best[pick])) pick = v;
        if (pick < 0) return {}; // disconnected
        in[pick] = 1;
        mst.emplace_back(std::min(from[pick], pick), std::max(from[pick], pick));
        for (int v = 0; v < n; ++v) {
            const double d = distance(pts[pick], pts[v]);
            if (!in[v] && d <= r && d < best[v]) {
                best[v] = d;
                from[v] = pick;
            }
        }
    }
    return mst;
}

bool has_edge(const std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

}  // namespace

TEST_CASE("gabriel reduction on the flat triangle") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0.5, 0.1}};
    const auto gg = gabriel_reduce(pts, unit_disk_adjacency(pts, 1.5));
    CHECK_FALSE(has_edge(gg, 0, 1)); // third point sits inside the diametral disk
    CHECK(has_edge(gg, 0, 2));
    CHECK(has_edge(gg, 1, 2));
}

TEST_CASE("two nodes keep their edge") {
    const std::vector<Point> pts{{0.1, 0.1}, {0.8, 0.9}};
    const auto gg = gabriel_reduce(pts, unit_disk_adjacency(pts, 1.5));
    CHECK(has_edge(gg, 0, 1));
}

TEST_CASE("gabriel_reduce agrees with the full-scan oracle on random instances") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = test::random_points(rng, 10);
        const double r = 0.3 + 0.5 * rng.uniform01();
        const auto got = gabriel_reduce(pts, unit_disk_adjacency(pts, r));
        const auto want = gabriel_brute(pts, r);
        CHECK(got == want);

        const auto udg = unit_disk_adjacency(pts, r);
        for (int v = 0; v < 10; ++v) CHECK(got[v].size() <= udg[v].size());
    }
}

TEST_CASE("gabriel graphs are planar and within the edge bound") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 10;
        const auto pts = test::random_points(rng, n);
        const Topology t = test::make_gabriel(pts, 0.6);
        const auto edges = t.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto [a, b] = edges[i];
                const auto [c, d] = edges[j];
                CHECK_FALSE(segments_properly_intersect(pts[a], pts[b], pts[c], pts[d]));
            }
        CHECK(t.edge_count() <= 3 * n - 8);
    }
}

TEST_CASE("UDG-restricted Euclidean MST is a subgraph of the Gabriel graph") {
    Rng rng(13);
    int checked = 0;
    for (int trial = 0; trial < 80 && checked < 50; ++trial) {
        const auto pts = test::random_points(rng, 10);
        const double r = 0.7;
        const auto mst = udg_mst(pts, r);
        if (mst.empty()) continue; // rare disconnected draw
        const auto gg = gabriel_reduce(pts, unit_disk_adjacency(pts, r));
        for (auto [u, v] : mst) CHECK(has_edge(gg, u, v));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("is_connected") {
    const Topology pair = test::make_topology({{0.1, 0.1}, {0.2, 0.1}}, {{0, 1}});
    CHECK(is_connected(pair));
    const Topology split = test::make_topology({{0.1, 0.1}, {0.9, 0.9}}, {});
    CHECK_FALSE(is_connected(split));
}

TEST_CASE("generate_topology basics") {
    SUBCASE("two robots in range of each other") {
        Rng rng(1);
        TopologyConfig cfg;
        cfg.n = 2;
        cfg.comm_radius = 1.4142135623;
        const Topology t = generate_topology(cfg, rng, 100.0);
        CHECK(t.edge_count() == 1);
    }
    SUBCASE("deterministic for a fixed seed") {
        TopologyConfig cfg;
        cfg.n = 100;
        cfg.comm_radius = 0.15;
        Rng r1(42), r2(42);
        const Topology a = generate_topology(cfg, r1, 100.0);
        const Topology b = generate_topology(cfg, r2, 100.0);
        REQUIRE(a.size() == b.size());
        for (int i = 0; i < a.size(); ++i) CHECK(a.pos(i) == b.pos(i));
        CHECK(a.adj == b.adj);
        CHECK(is_connected(a));
    }
    SUBCASE("positions stay in the unit square and outside the hole") {
        Rng rng(5);
        TopologyConfig cfg;
        cfg.n = 100;
        cfg.comm_radius = 0.25;
        cfg.hole = CircularHole{};
        const Topology t = generate_topology(cfg, rng, 100.0);
        for (const Robot& r : t.robots) {
            CHECK(r.pos.x >= 0.0);
            CHECK(r.pos.x <= 1.0);
            CHECK(r.pos.y >= 0.0);
            CHECK(r.pos.y <= 1.0);
            CHECK(distance(r.pos, cfg.hole->center) >= cfg.hole->radius);
        }
        CHECK(is_connected(t));
    }
    SUBCASE("sub-threshold radius reports connectivity unreachable") {
        Rng rng(9);
        TopologyConfig cfg;
        cfg.n = 100;
        cfg.comm_radius = 0.10;
        cfg.max_regenerations = 60;
        CHECK_THROWS_WITH_AS(generate_topology(cfg, rng, 100.0),
                             doctest::Contains("connectivity unreachable"), std::runtime_error);
    }
    SUBCASE("parameter validation") {
        Rng rng(1);
        TopologyConfig cfg;
        cfg.n = 1;
        CHECK_THROWS_AS(generate_topology(cfg, rng, 100.0), std::invalid_argument);
        cfg.n = 5;
        cfg.comm_radius = 2.0;
        CHECK_THROWS_AS(generate_topology(cfg, rng, 100.0), std::invalid_argument);
    }
}

TEST_CASE("update_after_move") {
    SUBCASE("identity move keeps the adjacency") {
        Rng rng(21);
        TopologyConfig cfg;
        cfg.n = 30;
        cfg.comm_radius = 0.35;
        Topology t = generate_topology(cfg, rng, 100.0);
        const auto before = t.adj;
        CHECK(update_after_move(t, 7, t.pos(7)));
        CHECK(t.adj == before);
    }
    SUBCASE("moving the end of a line rewires it") {
        // A - B - C in a row; C moves next to A.
        Topology t = test::make_gabriel({{0.1, 0.5}, {0.3, 0.5}, {0.5, 0.5}}, 0.25);
        REQUIRE(has_edge(t.adj, 0, 1));
        REQUIRE(has_edge(t.adj, 1, 2));
        REQUIRE_FALSE(has_edge(t.adj, 0, 2));
        CHECK(update_after_move(t, 2, Point{0.12, 0.52}));
        CHECK(has_edge(t.adj, 0, 2));
        const std::vector<Point> now{t.pos(0), t.pos(1), t.pos(2)};
        CHECK(t.adj == gabriel_reduce(now, unit_disk_adjacency(now, 0.25)));
    }
    SUBCASE("a move that isolates a robot reports disconnection") {
        Topology t = test::make_gabriel({{0.1, 0.5}, {0.3, 0.5}, {0.5, 0.5}}, 0.25);
        CHECK_FALSE(update_after_move(t, 2, Point{0.99, 0.99}));
    }
    SUBCASE("after 1000 random moves the adjacency equals a from-scratch rebuild") {
        Rng rng(22);
        TopologyConfig cfg;
        cfg.n = 20;
        cfg.comm_radius = 0.45;
        Topology t = generate_topology(cfg, rng, 100.0);
        for (int i = 0; i < 1000; ++i) {
            const NodeId mover = static_cast<NodeId>(rng.uniform_index(cfg.n));
            update_after_move(t, mover, Point{rng.uniform01(), rng.uniform01()});
            if (i % 97 == 0 || i == 999) {
                std::vector<Point> pts(cfg.n);
                for (int v = 0; v < cfg.n; ++v) pts[v] = t.pos(v);
                CHECK(t.adj == gabriel_reduce(pts, unit_disk_adjacency(pts, cfg.comm_radius)));
            }
        }
        std::vector<Point> pts(cfg.n);
        for (int v = 0; v < cfg.n; ++v) pts[v] = t.pos(v);
        CHECK(t.adj == gabriel_reduce(pts, unit_disk_adjacency(pts, cfg.comm_radius)));
    }
}

TEST_CASE("generated graphs satisfy the edge-count band") {
    Rng rng(31);
    TopologyConfig cfg;
    cfg.n = 100;
    cfg.comm_radius = 0.2;
    for (int i = 0; i < 5; ++i) {
        const Topology t = generate_topology(cfg, rng, 100.0);
        CHECK(t.edge_count() >= cfg.n - 1);
        CHECK(t.edge_count() < 3 * cfg.n);
    }
}
