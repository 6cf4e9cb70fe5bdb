#include "wsrn/routing.hpp"

namespace wsrn {

std::optional<NodeId> greedy_next(NodeId current, const Point& event, const Topology& t) {
    double best_d2 = distance2(t.pos(current), event);
    std::optional<NodeId> best;
    for (NodeId v : t.adj[current]) {
        const double d2 = distance2(t.pos(v), event);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = v;
        }
    }
    return best;
}

NodeId face_candidate(const RoutingMessage& msg, const Topology& t, HandRule rule) {
    const auto& nbrs = t.adj[msg.current];
    const Point& cur = t.pos(msg.current);
    const double ref = msg.came_from ? angle_of(cur, t.pos(*msg.came_from))
                                     : angle_of(cur, msg.event);
    std::vector<Point> pts;
    pts.reserve(nbrs.size());
    for (NodeId v : nbrs) pts.push_back(t.pos(v));
    const std::size_t idx = next_face_neighbor(cur, ref, pts, rule);
    return nbrs[idx];
}

NodeId face_next(RoutingMessage& msg, const Topology& t, HandRule rule) {
    const NodeId cur = msg.current;
    const NodeId nxt = face_candidate(msg, t, rule);
    // After-crossing face change: a crossing of the entry->event segment is
    // accepted only when strictly closer to the event than any prior one.
    if (auto x = segment_intersection(t.pos(cur), t.pos(nxt), msg.face_entry_point, msg.event)) {
        const double dx = distance(*x, msg.event);
        if (dx < msg.best_crossing_distance) {
            msg.best_crossing_distance = dx;
            ++msg.face_changes;
        }
    }
    msg.visited_directed_edges.insert(directed_edge_key(cur, nxt));
    msg.came_from = cur;
    msg.current = nxt;
    ++msg.steps;
    msg.hop_trace.push_back(nxt);
    return nxt;
}

RoutingOutcome gfgf2_route(NodeId source, const Point& event, double sr, const Topology& t,
                           HandRule rule) {
    RoutingMessage msg;
    msg.event = event;
    msg.sr = sr;
    msg.current = source;
    msg.hop_trace.push_back(source);

    auto finish = [&](StopReason reason) {
        msg.mode_trace.push_back(msg.mode);
        return RoutingOutcome{msg.current,        reason,         msg.steps,
                              msg.steps,          msg.hop_trace,  msg.mode_trace,
                              msg.face_changes};
    };

    for (;;) {
        if (msg.mode == RoutingMode::Greedy) {
            if (auto nxt = greedy_next(msg.current, event, t)) {
                msg.mode_trace.push_back(RoutingMode::Greedy);
                msg.current = *nxt;
                ++msg.steps;
                msg.hop_trace.push_back(*nxt);
                continue;
            }
            // Greedy terminus: the search-radius acceptance happens here, not
            // on the way down. Greedy runs as deep toward the event as the
            // graph allows, so the found robot is the local closest one.
            if (in_search_radius(t.pos(msg.current), event, sr))
                return finish(StopReason::InsideSR);
            // Not accepted: enter face mode anchored at this node.
            msg.mode = RoutingMode::Face;
            msg.face_entry_point = t.pos(msg.current);
            msg.face_entry_distance = distance(msg.face_entry_point, event);
            msg.best_crossing_distance = msg.face_entry_distance;
            msg.came_from.reset();
        } else {
            // Face arrival: accept inside the search radius, otherwise resume
            // greedy as soon as we are strictly closer than the face anchor.
            if (in_search_radius(t.pos(msg.current), event, sr))
                return finish(StopReason::InsideSR);
            if (distance(t.pos(msg.current), event) < msg.face_entry_distance) {
                msg.mode = RoutingMode::Greedy;
                continue;
            }
        }

        if (t.adj[msg.current].empty()) return finish(StopReason::LoopDetected);
        const NodeId cand = face_candidate(msg, t, rule);
        if (msg.visited_directed_edges.contains(directed_edge_key(msg.current, cand)))
            return finish(StopReason::LoopDetected);
        msg.mode_trace.push_back(RoutingMode::Face);
        face_next(msg, t, rule);
    }
}

}  // namespace wsrn
