#include "wsrn/allocation.hpp"

namespace wsrn {

namespace {

void credit(Topology& t, NodeId sender, std::int64_t k = 1) {
    t.robots[sender].messages_sent += k;
}

// One unicast per routing hop, sent by the forwarding node.
void credit_route(Topology& t, const RoutingOutcome& r) {
    for (int i = 0; i < r.steps; ++i) credit(t, r.hop_trace[i]);
}

AllocationResult base_result(const RoutingOutcome& r) {
    AllocationResult res;
    res.routing_messages = r.messages;
    res.routing_steps = r.steps;
    res.stop_reason = r.stop_reason;
    res.hop_trace = r.hop_trace;
    res.mode_trace = r.mode_trace;
    return res;
}

double remaining_after(const Topology& t, const EnergyParams& p, NodeId v, const Point& event) {
    const double d_m = distance(t.pos(v), event) * p.coordinate_scale;
    return t.robots[v].energy - energy_loss(d_m, p);
}

struct HopTree {
    std::vector<int> depth;     // -1 = unreached
    std::vector<NodeId> parent; // lowest-id neighbor one level up; -1 for root
};

HopTree hop_bounded_bfs(const Topology& t, NodeId root, int max_depth) {
    const int n = t.size();
    HopTree tr{std::vector<int>(n, -1), std::vector<NodeId>(n, -1)};
    tr.depth[root] = 0;
    std::vector<NodeId> frontier{root};
    for (int d = 0; d < max_depth && !frontier.empty(); ++d) {
        std::vector<NodeId> next;
        for (NodeId u : frontier)
            for (NodeId v : t.adj[u])
                if (tr.depth[v] < 0) {
                    tr.depth[v] = d + 1;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    for (NodeId v = 0; v < n; ++v) {
        if (tr.depth[v] <= 0) continue;
        for (NodeId u : t.adj[v])
            if (tr.depth[u] == tr.depth[v] - 1) {
                tr.parent[v] = u;
                break;
            }
    }
    return tr;
}

// Assignment notification travels down the tree path; every node above the
// winner sends once.
void credit_downpath(Topology& t, const HopTree& tr, NodeId winner, NodeId root,
                     std::int64_t& counter) {
    for (NodeId u = winner; u != root;) {
        u = tr.parent[u];
        credit(t, u);
        ++counter;
    }
}

}  // namespace

std::optional<NodeId> rfta2_decide(NodeId auctioneer, const std::vector<Bid>& bids,
                                   bool auctioneer_can_afford) {
    if (bids.empty()) {
        if (auctioneer_can_afford) return auctioneer;
        return std::nullopt; // stop criterion: network dead
    }
    const Bid* best = &bids.front();
    for (const Bid& b : bids)
        if (b.value > best->value || (b.value == best->value && b.bidder < best->bidder))
            best = &b;
    return best->bidder;
}

AllocationResult rfta1_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                HandRule rule) {
    const RoutingOutcome route = gfgf2_route(source, event, sr, t, rule);
    credit_route(t, route);
    AllocationResult res = base_result(route);

    const NodeId a = route.auctioneer;
    const auto& nbrs = t.adj[a];
    credit(t, a, static_cast<std::int64_t>(nbrs.size()));
    res.auction_messages += static_cast<std::int64_t>(nbrs.size());

    const double da = distance(t.pos(a), event);
    NodeId winner = a;
    double best = da;
    for (NodeId v : nbrs) {
        const double dv = distance(t.pos(v), event);
        if (dv < da) { // only strictly-closer robots bid back
            credit(t, v);
            ++res.auction_messages;
            if (dv < best || (dv == best && v < winner)) {
                best = dv;
                winner = v;
            }
        }
    }
    if (winner != a) {
        credit(t, a);
        ++res.auction_messages;
    }
    res.winner = winner;
    res.total_messages = res.routing_messages + res.auction_messages;
    return res;
}

AllocationResult rfta2_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                const EnergyParams& p, HandRule rule) {
    const RoutingOutcome route = gfgf2_route(source, event, sr, t, rule);
    credit_route(t, route);
    AllocationResult res = base_result(route);

    const NodeId a = route.auctioneer;
    const auto& nbrs = t.adj[a];
    credit(t, a, static_cast<std::int64_t>(nbrs.size()));
    res.auction_messages += static_cast<std::int64_t>(nbrs.size());

    std::vector<Bid> bids;
    for (NodeId v : nbrs) {
        const double rem = remaining_after(t, p, v, event);
        if (rem >= 0.0) {
            bids.push_back({v, rem, 1});
            credit(t, v);
            ++res.auction_messages;
        }
    }
    // The auctioneer evaluates its own affordability locally; no message.
    const bool a_afford = remaining_after(t, p, a, event) >= 0.0;
    const auto winner = rfta2_decide(a, bids, a_afford);
    if (winner && *winner != a) {
        credit(t, a);
        ++res.auction_messages;
    }
    res.winner = winner.value_or(-1);
    res.total_messages = res.routing_messages + res.auction_messages;
    return res;
}

AllocationResult rfta2ge_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                  const EnergyParams& p, HandRule rule) {
    const RoutingOutcome route = gfgf2_route(source, event, sr, t, rule);
    credit_route(t, route);
    AllocationResult res = base_result(route);

    const int n = t.size();
    const NodeId a = route.auctioneer;
    const auto& nbrs = t.adj[a];
    credit(t, a, static_cast<std::int64_t>(nbrs.size()));
    res.auction_messages += static_cast<std::int64_t>(nbrs.size());

    // Greedy extension: every 1-hop neighbor forwards the call to all of its
    // own neighbors except the auctioneer. Duplicate deliveries to the same
    // 2-hop robot all count as messages.
    std::vector<char> onehop(n, 0);
    for (NodeId y : nbrs) onehop[y] = 1;
    for (NodeId y : nbrs) {
        const auto fwd = static_cast<std::int64_t>(t.adj[y].size()) - 1;
        credit(t, y, fwd);
        res.auction_messages += fwd;
    }

    std::vector<Bid> bids;
    for (NodeId v : nbrs) {
        const double rem = remaining_after(t, p, v, event);
        if (rem >= 0.0) {
            bids.push_back({v, rem, 1});
            credit(t, v);
            ++res.auction_messages;
        }
    }

    // A strictly 2-hop robot bids once, relayed through its lowest-id
    // forwarder (2 messages: bidder -> forwarder -> auctioneer).
    std::vector<NodeId> forwarder(n, -1);
    for (NodeId y : nbrs)
        for (NodeId z : t.adj[y]) {
            if (z == a || onehop[z]) continue;
            if (forwarder[z] < 0) forwarder[z] = y;
        }
    for (NodeId z = 0; z < n; ++z) {
        if (forwarder[z] < 0) continue;
        const double rem = remaining_after(t, p, z, event);
        if (rem >= 0.0) {
            bids.push_back({z, rem, 2});
            credit(t, z);
            credit(t, forwarder[z]);
            res.auction_messages += 2;
        }
    }

    const bool a_afford = remaining_after(t, p, a, event) >= 0.0;
    const auto winner = rfta2_decide(a, bids, a_afford);
    if (winner && *winner != a) {
        if (onehop[*winner]) {
            credit(t, a);
            ++res.auction_messages;
        } else {
            credit(t, a);
            credit(t, forwarder[*winner]);
            res.auction_messages += 2;
        }
    }
    res.winner = winner.value_or(-1);
    res.total_messages = res.routing_messages + res.auction_messages;
    return res;
}

AllocationResult gfgf2a_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                 const EnergyParams& p, HandRule rule) {
    const RoutingOutcome route = gfgf2_route(source, event, sr, t, rule);
    credit_route(t, route);
    AllocationResult res = base_result(route);

    const NodeId found = route.auctioneer;
    res.winner = remaining_after(t, p, found, event) >= 0.0 ? found : -1;
    res.total_messages = res.routing_messages;
    return res;
}

AllocationResult ksaap_allocate(NodeId source, const Point& event, int k, Topology& t,
                                const EnergyParams& p) {
    AllocationResult res;
    const int n = t.size();
    const HopTree tr = hop_bounded_bfs(t, source, k);

    // Flood: the auctioneer sends to every neighbor; a robot reached at depth
    // d < k forwards once to all neighbors but its parent; depth-k robots
    // only listen.
    credit(t, source, static_cast<std::int64_t>(t.adj[source].size()));
    res.auction_messages += static_cast<std::int64_t>(t.adj[source].size());
    for (NodeId v = 0; v < n; ++v)
        if (tr.depth[v] > 0 && tr.depth[v] < k) {
            const auto fwd = static_cast<std::int64_t>(t.adj[v].size()) - 1;
            credit(t, v, fwd);
            res.auction_messages += fwd;
        }

    std::vector<Bid> bids;
    for (NodeId v = 0; v < n; ++v) {
        if (tr.depth[v] < 1) continue;
        const double rem = remaining_after(t, p, v, event);
        if (rem >= 0.0) bids.push_back({v, rem, tr.depth[v]});
    }

    // Aggregation: each tree node with a bid somewhere in its subtree sends
    // one merged report to its parent.
    std::vector<char> reporting(n, 0);
    for (const Bid& b : bids)
        for (NodeId u = b.bidder; u != source && !reporting[u]; u = tr.parent[u]) {
            reporting[u] = 1;
            credit(t, u);
            ++res.auction_messages;
        }

    const bool src_afford = remaining_after(t, p, source, event) >= 0.0;
    const auto winner = rfta2_decide(source, bids, src_afford);
    if (winner && *winner != source) credit_downpath(t, tr, *winner, source, res.auction_messages);
    res.winner = winner.value_or(-1);
    res.total_messages = res.auction_messages;
    return res;
}

AllocationResult bfs_allocate(NodeId source, const Point& event, int hopmax, Topology& t,
                              const EnergyParams& p) {
    AllocationResult res;
    const int n = t.size();
    const HopTree tr = hop_bounded_bfs(t, source, hopmax);

    // Tree construction costs one message down and one up per tree edge;
    // afterwards every tree node reports one aggregated bid message upward.
    for (NodeId v = 0; v < n; ++v) {
        if (tr.depth[v] < 1) continue;
        credit(t, tr.parent[v]); // invite down
        credit(t, v, 2);         // join up + merged report up
        res.auction_messages += 3;
    }

    std::vector<Bid> bids;
    for (NodeId v = 0; v < n; ++v) {
        if (tr.depth[v] < 1) continue;
        const double rem = remaining_after(t, p, v, event);
        if (rem >= 0.0) bids.push_back({v, rem, tr.depth[v]});
    }

    const bool src_afford = remaining_after(t, p, source, event) >= 0.0;
    const auto winner = rfta2_decide(source, bids, src_afford);
    if (winner && *winner != source) credit_downpath(t, tr, *winner, source, res.auction_messages);
    res.winner = winner.value_or(-1);
    res.total_messages = res.auction_messages;
    return res;
}

}  // namespace wsrn
