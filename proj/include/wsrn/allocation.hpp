#ifndef WSRN_ALLOCATION_HPP
#define WSRN_ALLOCATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wsrn/energy.hpp"
#include "wsrn/routing.hpp"
#include "wsrn/topology.hpp"

namespace wsrn {

struct Bid {
    NodeId bidder = -1;
    double value = 0.0;          // remaining energy after the task (distance for RFTA1)
    int hops_to_auctioneer = 0;
};

// One round's task assignment. winner == -1 means the stop criterion fired
// (network dead). Message counters are also credited to the sending robots'
// messages_sent, so the per-robot ledger and the round totals agree.
struct AllocationResult {
    NodeId winner = -1;
    std::int64_t routing_messages = 0;
    std::int64_t auction_messages = 0;
    std::int64_t total_messages = 0;
    int routing_steps = 0;
    std::optional<StopReason> stop_reason; // empty for the auction-only baselines
    std::vector<NodeId> hop_trace;
    std::vector<RoutingMode> mode_trace;

    bool assigned() const { return winner >= 0; }
};

// The four-case auction decision: most remaining energy among bids, the single
// bidder, the auctioneer itself when it can afford, or nullopt (network dead).
// Value ties fall to the lower bidder id.
std::optional<NodeId> rfta2_decide(NodeId auctioneer, const std::vector<Bid>& bids,
                                   bool auctioneer_can_afford);

// Distance-metric auction after GFGF2 routing; only strictly-closer neighbors
// bid. Never reports a dead network (no energy accounting).
AllocationResult rfta1_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                HandRule rule = HandRule::Right);

// Remaining-energy auction over the auctioneer's 1-hop neighborhood.
AllocationResult rfta2_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                const EnergyParams& p, HandRule rule = HandRule::Right);

// RFTA2 with the greedy extension: 1-hop neighbors forward the call to their
// own neighbors, so the bidder pool is the 2-hop neighborhood. A strictly
// 2-hop bid relays through its forwarder (2 messages).
AllocationResult rfta2ge_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                  const EnergyParams& p, HandRule rule = HandRule::Right);

// No auction: the robot found by routing takes the task or the network is dead.
AllocationResult gfgf2a_allocate(NodeId source, const Point& event, double sr, Topology& t,
                                 const EnergyParams& p, HandRule rule = HandRule::Right);

// Hop-bounded flood auction rooted at the collecting robot (k-SAAP style):
// call floods to every robot within k hops, bids aggregate back up the flood
// tree, best remaining energy wins.
AllocationResult ksaap_allocate(NodeId source, const Point& event, int k, Topology& t,
                                const EnergyParams& p);

// Depth-bounded BFS-tree auction rooted at the collecting robot: the tree is
// built (one message per tree edge, down and up), every tree node reports an
// aggregated bid upward, the assignment travels back down.
AllocationResult bfs_allocate(NodeId source, const Point& event, int hopmax, Topology& t,
                              const EnergyParams& p);

}  // namespace wsrn

#endif  // WSRN_ALLOCATION_HPP
