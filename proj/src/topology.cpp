#include "wsrn/topology.hpp"

#include <cmath>
#include <stdexcept>

namespace wsrn {

int Topology::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return static_cast<int>(twice / 2);
}

std::vector<std::pair<NodeId, NodeId>> Topology::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < size(); ++u)
        for (NodeId v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<NodeId>> unit_disk_adjacency(const std::vector<Point>& pts, double r) {
    const int n = static_cast<int>(pts.size());
    const double r2 = r * r;
    std::vector<std::vector<NodeId>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (distance2(pts[i], pts[j]) <= r2) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return adj;
}

std::vector<std::vector<NodeId>> gabriel_reduce(const std::vector<Point>& pts,
                                                const std::vector<std::vector<NodeId>>& udg) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<NodeId>> gg(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : udg[u]) {
            if (v < u) continue;
            const Point m{(pts[u].x + pts[v].x) / 2.0, (pts[u].y + pts[v].y) / 2.0};
            const double quarter_len2 = distance2(pts[u], pts[v]) / 4.0;
            bool witnessed = false;
            for (NodeId w : udg[u]) {
                if (w == v) continue;
                if (distance2(m, pts[w]) < quarter_len2) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                gg[u].push_back(v);
                gg[v].push_back(u);
            }
        }
    }
    return gg;
}

bool is_connected(const Topology& t) {
    const int n = t.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : t.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

namespace {

// Coincident points would make the diametral-disk test ill-defined; nudge the
// newer of any pair closer than 1e-9.
void separate_coincident(std::vector<Point>& pts) {
    for (std::size_t j = 1; j < pts.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (distance(pts[i], pts[j]) < 1e-9)
                pts[j].x = std::min(pts[j].x + 1e-9, 1.0);
}

std::vector<Point> draw_positions(const TopologyConfig& cfg, Rng& rng) {
    std::vector<Point> pts(cfg.n);
    for (auto& p : pts) {
        do {
            p.x = rng.uniform01();
            p.y = rng.uniform01();
        } while (cfg.hole && distance(p, cfg.hole->center) < cfg.hole->radius);
    }
    separate_coincident(pts);
    return pts;
}

}  // namespace

Topology generate_topology(const TopologyConfig& cfg, Rng& rng, double initial_energy) {
    if (cfg.n < 2) throw std::invalid_argument("generate_topology: n must be >= 2");
    if (!(cfg.comm_radius > 0.0) || cfg.comm_radius > std::sqrt(2.0))
        throw std::invalid_argument("generate_topology: comm radius out of (0, sqrt(2)]");

    for (int attempt = 0; attempt < cfg.max_regenerations; ++attempt) {
        Topology t;
        t.comm_radius = cfg.comm_radius;
        t.hole = cfg.hole;

        const std::vector<Point> pts = draw_positions(cfg, rng);
        t.adj = gabriel_reduce(pts, unit_disk_adjacency(pts, cfg.comm_radius));
        t.robots.resize(cfg.n);
        for (int i = 0; i < cfg.n; ++i) {
            t.robots[i].id = i;
            t.robots[i].pos = pts[i];
            t.robots[i].energy = initial_energy;
        }
        if (is_connected(t)) return t;
    }
    throw std::runtime_error(
        "connectivity unreachable: no connected deployment found; comm radius is likely "
        "below the connectivity threshold (~0.12 for n=100)");
}

bool update_after_move(Topology& t, NodeId mover, const Point& destination) {
    t.robots[mover].pos = destination;
    std::vector<Point> pts(t.size());
    for (int i = 0; i < t.size(); ++i) pts[i] = t.robots[i].pos;
    t.adj = gabriel_reduce(pts, unit_disk_adjacency(pts, t.comm_radius));
    return is_connected(t);
}

}  // namespace wsrn
