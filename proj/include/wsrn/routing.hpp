#ifndef WSRN_ROUTING_HPP
#define WSRN_ROUTING_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "wsrn/topology.hpp"

namespace wsrn {

enum class RoutingMode { Greedy, Face };
enum class StopReason { InsideSR, LoopDetected };

inline std::uint64_t directed_edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

// In-flight state of one GFGF2 routing.
struct RoutingMessage {
    Point event;
    double sr = 0.0;
    RoutingMode mode = RoutingMode::Greedy;
    NodeId current = 0;
    std::optional<NodeId> came_from;        // face-walk predecessor; empty on the first face step
    Point face_entry_point;                 // position of the node where greedy last failed
    double face_entry_distance = 0.0;       // distance to the event at that node
    double best_crossing_distance = 0.0;    // closer-intersection filter state
    std::unordered_set<std::uint64_t> visited_directed_edges;
    std::vector<NodeId> hop_trace;
    std::vector<RoutingMode> mode_trace;    // mode in which each trace node forwarded (or stopped)
    int steps = 0;
    int face_changes = 0;
};

struct RoutingOutcome {
    NodeId auctioneer = -1;
    StopReason stop_reason = StopReason::LoopDetected;
    int steps = 0;
    std::int64_t messages = 0; // one unicast per hop, so messages == steps
    std::vector<NodeId> hop_trace;
    std::vector<RoutingMode> mode_trace;
    int face_changes = 0;
};

// Neighbor minimizing distance to the event among those strictly closer than
// the current node; nullopt at a local minimum. Equidistant candidates fall
// to the lower id.
std::optional<NodeId> greedy_next(NodeId current, const Point& event, const Topology& t);

// Hand-rule successor for the current face state. Pure; the caller decides
// whether traversing it would revisit a directed edge.
NodeId face_candidate(const RoutingMessage& msg, const Topology& t, HandRule rule);

// Traverses the candidate edge: applies the closer-intersection face-change
// filter against the face-entry->event segment, records the directed edge,
// and advances the message.
NodeId face_next(RoutingMessage& msg, const Topology& t, HandRule rule);

// Greedy-face-greedy delivery toward an event location with a search-radius
// stop. Greedy always runs to its terminus; the search-radius acceptance is
// applied at greedy-failure nodes and at nodes reached by face steps. Stops
// with InsideSR at the first accepted node (the source counts when it is the
// greedy terminus), or with LoopDetected when the face walk would re-traverse
// a directed edge; the last examined robot is then the auctioneer.
RoutingOutcome gfgf2_route(NodeId source, const Point& event, double sr, const Topology& t,
                           HandRule rule = HandRule::Right);

}  // namespace wsrn

#endif  // WSRN_ROUTING_HPP
