#ifndef WSRN_TOPOLOGY_HPP
#define WSRN_TOPOLOGY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wsrn/geometry.hpp"
#include "wsrn/rng.hpp"
#include "wsrn/robot.hpp"

namespace wsrn {

struct CircularHole {
    Point center{0.5, 0.5};
    double radius = 0.25;
};

// The communication graph over current robot positions: unit-disk edges
// reduced to the Gabriel subgraph. Neighbor lists are sorted by id.
struct Topology {
    std::vector<Robot> robots;
    double comm_radius = 0.0;
    std::vector<std::vector<NodeId>> adj;
    std::optional<CircularHole> hole;

    int size() const { return static_cast<int>(robots.size()); }
    const Point& pos(NodeId id) const { return robots[id].pos; }
    int edge_count() const;
    std::vector<std::pair<NodeId, NodeId>> edges() const; // u < v, sorted
};

std::vector<std::vector<NodeId>> unit_disk_adjacency(const std::vector<Point>& pts, double r);

// Keeps UDG edge (u,v) iff no third node lies strictly inside the disk with
// diameter uv. Witness candidates only need scanning among u's UDG neighbors:
// any witness is within |uv| of both endpoints.
std::vector<std::vector<NodeId>> gabriel_reduce(const std::vector<Point>& pts,
                                                const std::vector<std::vector<NodeId>>& udg);

bool is_connected(const Topology& t);

struct TopologyConfig {
    int n = 100;
    double comm_radius = 0.2;
    std::optional<CircularHole> hole;
    int max_regenerations = 1000;
};

// Uniform deployment in the unit square (rejection-sampled outside the hole
// when present), regenerated from fresh draws of the same stream until the
// Gabriel graph is connected. Throws std::runtime_error("connectivity
// unreachable...") when the retry cap is hit, which signals a comm radius
// below the connectivity threshold.
Topology generate_topology(const TopologyConfig& cfg, Rng& rng, double initial_energy);

// Moves one robot and rebuilds UDG + Gabriel adjacency from scratch over the
// new positions. Returns false when the resulting graph is disconnected; the
// caller records the flag and continues.
bool update_after_move(Topology& t, NodeId mover, const Point& destination);

}  // namespace wsrn

#endif  // WSRN_TOPOLOGY_HPP
