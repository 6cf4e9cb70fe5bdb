#ifndef WSRN_SIMULATOR_HPP
#define WSRN_SIMULATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wsrn/allocation.hpp"
#include "wsrn/energy.hpp"
#include "wsrn/rng.hpp"
#include "wsrn/topology.hpp"

namespace wsrn {

enum class Algorithm { GFGF2A, RFTA1, RFTA2, RFTA2GE, KSAAP, BFS };
enum class TopologyKind { Random, RandomWithHole };

std::string algorithm_name(Algorithm a);
std::string topology_name(TopologyKind k);

struct SimConfig {
    int n = 100;
    double r = 0.25;
    double sr_base = 0.1;
    int sr_multiplier = 2;
    TopologyKind topology = TopologyKind::Random;
    Algorithm algorithm = Algorithm::RFTA2;
    int k = 7;      // KSAAP hop bound
    int hopmax = 7; // BFS tree depth
    int runs = 100;
    std::uint64_t seed = 0; // run i uses seed + i
    EnergyParams energy;
    HandRule hand_rule = HandRule::Right;
    CircularHole hole; // used when topology == RandomWithHole
    int max_regenerations = 1000;

    double sr() const { return sr_base * sr_multiplier; }
    TopologyConfig topology_config() const;
};

struct RoundRecord {
    int round_index = 0;
    Point event;
    NodeId collecting_robot = -1;
    AllocationResult result;
    double winner_travel_m = 0.0; // meters, from the winner's pre-move position
    bool disconnected_after = false;
    int edges_before = 0; // Gabriel edge count when the round ran
};

struct RunRecord {
    std::uint64_t seed = 0;
    int lifetime_rounds = 0; // successfully allocated rounds
    std::vector<RoundRecord> rounds;
    std::vector<Robot> final_robots;
    std::int64_t total_messages = 0;
    bool ever_disconnected = false;
    int step_bound_violations = 0; // rounds with routing_steps > n * edges
};

// Mutable state owned by one lifetime simulation.
struct SimState {
    SimConfig cfg;
    Rng rng;
    Topology topo;
    bool dead = false;
    int rounds_done = 0;

    SimState(const SimConfig& c, std::uint64_t seed);
};

// One round: draw the event, draw the collecting robot, allocate, and on
// success move the winner and rebuild the topology. Random draw order per
// round: event.x, event.y, collecting robot index.
RoundRecord run_round(SimState& s);

// Rounds until the stop criterion fires. The 100000-round cap is a bug
// tripwire only; energy drain guarantees termination long before it.
RunRecord run_lifetime(const SimConfig& cfg, std::uint64_t seed);

// Runs cfg.runs lifetimes on seeds cfg.seed .. cfg.seed+runs-1, distributed
// over `jobs` worker threads. Results come back in seed order, so the output
// is independent of the pool size.
std::vector<RunRecord> run_many(const SimConfig& cfg, int jobs = 1);

struct Stat {
    double mean = 0.0;
    double sd = 0.0; // sample stddev (n-1)
    double ci = 0.0; // 95% half-width: 1.96 * sd / sqrt(runs)
};

// Cross-run aggregates in the shape of the reference statistics tables:
// per-robot quantities are averaged over robots within a run first.
struct SimReport {
    int runs = 0;
    Stat anl;            // network lifetime, rounds
    Stat ampr;           // messages sent per robot
    Stat arre;           // remaining robot energy, percent
    Stat anrr;           // reactions per robot
    Stat atdpr;          // traveled distance per robot, meters
    Stat total_msgs;             // messages per run
    Stat per_round_msgs;         // messages per simulated round
    Stat per_round_auction_msgs; // auction-phase share of the above
    double min_rre_mean = 0.0;
    double mean_edges = 0.0;
    double mean_degree = 0.0;
    double mean_faces = 0.0; // c - n + 1
};

Stat make_stat(const std::vector<double>& xs);
SimReport aggregate(const std::vector<RunRecord>& runs, const SimConfig& cfg);

// Single-shot protocol used for the distance-metric experiments: one fresh
// network, one event, one routing + auction, no movement.
struct SingleShotRecord {
    std::uint64_t seed = 0;
    Point event;
    NodeId source = -1;
    NodeId rfta1_winner = -1;
    NodeId gfgf2_found = -1;
    NodeId closest_robot = -1;
    std::int64_t rfta1_messages = 0;
    std::int64_t gfgf2_messages = 0;
};

SingleShotRecord rfta1_single_shot(const SimConfig& cfg, std::uint64_t seed);

}  // namespace wsrn

#endif  // WSRN_SIMULATOR_HPP
