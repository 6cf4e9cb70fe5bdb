#include "wsrn/simulator.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wsrn {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::GFGF2A: return "gfgf2a";
        case Algorithm::RFTA1: return "rfta1";
        case Algorithm::RFTA2: return "rfta2";
        case Algorithm::RFTA2GE: return "rfta2ge";
        case Algorithm::KSAAP: return "ksaap";
        case Algorithm::BFS: return "bfs";
    }
    return "?";
}

std::string topology_name(TopologyKind k) {
    return k == TopologyKind::Random ? "random" : "hole";
}

TopologyConfig SimConfig::topology_config() const {
    TopologyConfig tc;
    tc.n = n;
    tc.comm_radius = r;
    tc.max_regenerations = max_regenerations;
    if (topology == TopologyKind::RandomWithHole) tc.hole = hole;
    return tc;
}

SimState::SimState(const SimConfig& c, std::uint64_t seed)
    : cfg(c), rng(seed), topo(generate_topology(c.topology_config(), rng, c.energy.initial_energy)) {}

namespace {

AllocationResult dispatch(SimState& s, NodeId source, const Point& event) {
    const SimConfig& c = s.cfg;
    switch (c.algorithm) {
        case Algorithm::GFGF2A:
            return gfgf2a_allocate(source, event, c.sr(), s.topo, c.energy, c.hand_rule);
        case Algorithm::RFTA2:
            return rfta2_allocate(source, event, c.sr(), s.topo, c.energy, c.hand_rule);
        case Algorithm::RFTA2GE:
            return rfta2ge_allocate(source, event, c.sr(), s.topo, c.energy, c.hand_rule);
        case Algorithm::KSAAP:
            return ksaap_allocate(source, event, c.k, s.topo, c.energy);
        case Algorithm::BFS:
            return bfs_allocate(source, event, c.hopmax, s.topo, c.energy);
        case Algorithm::RFTA1:
            throw std::invalid_argument(
                "rfta1 is a single-shot protocol; it does not run lifetime rounds");
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace

RoundRecord run_round(SimState& s) {
    if (s.dead) throw std::logic_error("run_round called after the network died");

    RoundRecord rec;
    rec.round_index = s.rounds_done;
    rec.edges_before = s.topo.edge_count();
    rec.event = Point{s.rng.uniform01(), s.rng.uniform01()};
    rec.collecting_robot = static_cast<NodeId>(s.rng.uniform_index(s.topo.size()));
    rec.result = dispatch(s, rec.collecting_robot, rec.event);

    if (rec.result.assigned()) {
        Robot& w = s.topo.robots[rec.result.winner];
        rec.winner_travel_m = distance(w.pos, rec.event) * s.cfg.energy.coordinate_scale;
        consume(w, rec.winner_travel_m, s.cfg.energy);
        rec.disconnected_after = !update_after_move(s.topo, w.id, rec.event);
        ++s.rounds_done;
    } else {
        s.dead = true;
    }
    return rec;
}

RunRecord run_lifetime(const SimConfig& cfg, std::uint64_t seed) {
    constexpr int kRoundCap = 100000;

    SimState s(cfg, seed);
    RunRecord run;
    run.seed = seed;
    while (!s.dead) {
        if (s.rounds_done >= kRoundCap)
            throw std::runtime_error("non-terminating simulation: round cap hit");
        RoundRecord rec = run_round(s);
        if (rec.result.routing_steps > cfg.n * rec.edges_before) ++run.step_bound_violations;
        if (rec.disconnected_after) run.ever_disconnected = true;
        run.rounds.push_back(std::move(rec));
    }
    run.lifetime_rounds = s.rounds_done;
    run.final_robots = s.topo.robots;
    for (const Robot& r : run.final_robots) run.total_messages += r.messages_sent;
    return run;
}

std::vector<RunRecord> run_many(const SimConfig& cfg, int jobs) {
    const int runs = cfg.runs;
    std::vector<RunRecord> out(runs);
    if (jobs < 2 || runs < 2) {
        for (int i = 0; i < runs; ++i) out[i] = run_lifetime(cfg, cfg.seed + i);
        return out;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= runs) return;
            out[i] = run_lifetime(cfg, cfg.seed + i);
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min(jobs, runs);
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

Stat make_stat(const std::vector<double>& xs) {
    Stat st;
    const auto n = xs.size();
    if (n == 0) return st;
    double sum = 0.0;
    for (double x : xs) sum += x;
    st.mean = sum / static_cast<double>(n);
    if (n >= 2) {
        double ss = 0.0;
        for (double x : xs) ss += (x - st.mean) * (x - st.mean);
        st.sd = std::sqrt(ss / static_cast<double>(n - 1));
        st.ci = 1.96 * st.sd / std::sqrt(static_cast<double>(n));
    }
    return st;
}

SimReport aggregate(const std::vector<RunRecord>& runs, const SimConfig& cfg) {
    SimReport rep;
    rep.runs = static_cast<int>(runs.size());
    const double n = cfg.n;
    const double e0 = cfg.energy.initial_energy;

    std::vector<double> anl, ampr, arre, anrr, atdpr, totals, per_round, per_round_auction;
    double min_sum = 0.0, edges_sum = 0.0;
    for (const RunRecord& run : runs) {
        anl.push_back(run.lifetime_rounds);
        ampr.push_back(static_cast<double>(run.total_messages) / n);
        totals.push_back(static_cast<double>(run.total_messages));
        per_round.push_back(static_cast<double>(run.total_messages) /
                            static_cast<double>(run.rounds.size()));
        double auction = 0.0;
        for (const RoundRecord& rd : run.rounds)
            auction += static_cast<double>(rd.result.auction_messages);
        per_round_auction.push_back(auction / static_cast<double>(run.rounds.size()));

        double e = 0.0, reacts = 0.0, trav = 0.0, emin = 1e300;
        for (const Robot& r : run.final_robots) {
            const double pct = 100.0 * r.energy / e0;
            e += pct;
            emin = std::min(emin, pct);
            reacts += r.reactions;
            trav += r.traveled;
        }
        arre.push_back(e / n);
        anrr.push_back(reacts / n);
        atdpr.push_back(trav / n);
        min_sum += emin;

        double ec = 0.0;
        for (const RoundRecord& rd : run.rounds) ec += rd.edges_before;
        edges_sum += ec / static_cast<double>(run.rounds.size());
    }
    rep.anl = make_stat(anl);
    rep.ampr = make_stat(ampr);
    rep.arre = make_stat(arre);
    rep.anrr = make_stat(anrr);
    rep.atdpr = make_stat(atdpr);
    rep.total_msgs = make_stat(totals);
    rep.per_round_msgs = make_stat(per_round);
    rep.per_round_auction_msgs = make_stat(per_round_auction);
    if (!runs.empty()) {
        rep.min_rre_mean = min_sum / runs.size();
        rep.mean_edges = edges_sum / runs.size();
        rep.mean_degree = 2.0 * rep.mean_edges / n;
        rep.mean_faces = rep.mean_edges - n + 1.0;
    }
    return rep;
}

SingleShotRecord rfta1_single_shot(const SimConfig& cfg, std::uint64_t seed) {
    SimState s(cfg, seed);
    SingleShotRecord rec;
    rec.seed = seed;
    rec.event = Point{s.rng.uniform01(), s.rng.uniform01()};
    rec.source = static_cast<NodeId>(s.rng.uniform_index(s.topo.size()));

    const RoutingOutcome found = gfgf2_route(rec.source, rec.event, cfg.sr(), s.topo, cfg.hand_rule);
    rec.gfgf2_found = found.auctioneer;
    rec.gfgf2_messages = found.messages;

    const AllocationResult r1 = rfta1_allocate(rec.source, rec.event, cfg.sr(), s.topo, cfg.hand_rule);
    rec.rfta1_winner = r1.winner;
    rec.rfta1_messages = r1.total_messages;

    NodeId best = 0;
    for (NodeId v = 1; v < s.topo.size(); ++v)
        if (distance2(s.topo.pos(v), rec.event) < distance2(s.topo.pos(best), rec.event)) best = v;
    rec.closest_robot = best;
    return rec;
}

}  // namespace wsrn
