#include "wsrn/presets.hpp"

#include <atomic>
#include <filesystem>
#include <stdexcept>
#include <thread>

#include "wsrn/csv.hpp"

namespace wsrn {

namespace {

const double kRGrid[] = {0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50, 0.55};

std::string join_path(const std::string& dir, const std::string& file) {
    return (std::filesystem::path(dir) / file).string();
}

std::string stop_reason_name(const AllocationResult& r) {
    if (!r.stop_reason) return "none";
    return *r.stop_reason == StopReason::InsideSR ? "inside_sr" : "loop";
}

SimConfig base_config(Algorithm alg, TopologyKind topo, double r, int sr_mult,
                      std::uint64_t seed) {
    SimConfig cfg;
    cfg.algorithm = alg;
    cfg.topology = topo;
    cfg.r = r;
    cfg.sr_multiplier = sr_mult;
    cfg.seed = seed;
    return cfg;
}

void write_aggregate_rows(CsvWriter& w, const std::vector<SimConfig>& grid, const RunOptions& opt) {
    w.row(aggregate_header());
    for (const SimConfig& cfg : grid) {
        const auto runs = run_many(cfg, opt.jobs);
        w.row(aggregate_row(cfg, aggregate(runs, cfg)));
    }
}

void write_per_round(CsvWriter& w, const std::vector<RunRecord>& runs) {
    w.row({"run", "round", "event_x", "event_y", "source", "winner", "stop_reason",
           "routing_msgs", "auction_msgs", "steps", "travel_m"});
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (const RoundRecord& rd : runs[i].rounds)
            w.row({fmt_int(static_cast<std::int64_t>(i)), fmt_int(rd.round_index),
                   fmt_num(rd.event.x), fmt_num(rd.event.y), fmt_int(rd.collecting_robot),
                   fmt_int(rd.result.winner), stop_reason_name(rd.result),
                   fmt_int(rd.result.routing_messages), fmt_int(rd.result.auction_messages),
                   fmt_int(rd.result.routing_steps), fmt_num(rd.winner_travel_m)});
}

void write_trace(CsvWriter& w, const RunRecord& run) {
    w.row({"round", "step", "node_id", "mode"});
    for (const RoundRecord& rd : run.rounds)
        for (std::size_t s = 0; s < rd.result.hop_trace.size(); ++s)
            w.row({fmt_int(rd.round_index), fmt_int(static_cast<std::int64_t>(s)),
                   fmt_int(rd.result.hop_trace[s]),
                   rd.result.mode_trace[s] == RoutingMode::Greedy ? "greedy" : "face"});
}

}  // namespace

const std::vector<PresetSpec>& preset_list() {
    static const std::vector<PresetSpec> presets = {
        {"fig6_8_rfta1",
         "single-shot rfta1 vs bare gfgf2 routing: message cost and closest-robot rate, "
         "r grid 0.15..0.55, both topologies"},
        {"fig9_10_baselines",
         "lifetime and communication at r=0.2, 2SR, random topology: rfta2, rfta2ge, gfgf2a, "
         "ksaap k=7, bfs 7 and 10"},
        {"fig11_12_rfta2", "rfta2 lifetime and messages over r grid x SR..4SR, both topologies"},
        {"fig13_14_rfta2ge",
         "rfta2ge lifetime and messages over r grid x SR..4SR, both topologies"},
        {"fig15_16_comparison",
         "rfta2 vs gfgf2a vs rfta2ge at 2SR over the r grid, both topologies"},
        {"table2_random", "robot energy statistics at r=0.25, 2SR, random topology"},
        {"table3_hole", "robot energy statistics at r=0.25, 2SR, topology with hole"},
        {"lemma1_check", "closed-form lower bound vs Monte Carlo for the search-radius hit rate"},
        {"lemma2_sweep", "mean lifetime at SR..4SR for rfta2/rfta2ge, r in {0.20, 0.25}"},
    };
    return presets;
}

std::vector<std::string> aggregate_header() {
    return {"algorithm", "topology", "n",       "r",       "sr",       "runs",    "seed",
            "anl",       "anl_ci",   "ampr",    "ampr_sd", "arre",     "arre_sd", "min_rre",
            "anrr",      "anrr_sd",  "atdpr",   "atdpr_sd", "total_msgs_mean", "total_msgs_ci"};
}

std::vector<std::string> aggregate_row(const SimConfig& cfg, const SimReport& rep) {
    std::string alg = algorithm_name(cfg.algorithm);
    if (cfg.algorithm == Algorithm::KSAAP) alg += "_k" + std::to_string(cfg.k);
    if (cfg.algorithm == Algorithm::BFS) alg += "_h" + std::to_string(cfg.hopmax);
    return {alg,
            topology_name(cfg.topology),
            fmt_int(cfg.n),
            fmt_num(cfg.r),
            fmt_num(cfg.sr()),
            fmt_int(cfg.runs),
            fmt_int(static_cast<std::int64_t>(cfg.seed)),
            fmt_num(rep.anl.mean),
            fmt_num(rep.anl.ci),
            fmt_num(rep.ampr.mean),
            fmt_num(rep.ampr.sd),
            fmt_num(rep.arre.mean),
            fmt_num(rep.arre.sd),
            fmt_num(rep.min_rre_mean),
            fmt_num(rep.anrr.mean),
            fmt_num(rep.anrr.sd),
            fmt_num(rep.atdpr.mean),
            fmt_num(rep.atdpr.sd),
            fmt_num(rep.total_msgs.mean),
            fmt_num(rep.total_msgs.ci)};
}

SingleShotSummary run_single_shots(const SimConfig& cfg, int jobs) {
    std::vector<SingleShotRecord> recs(cfg.runs);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.runs) return;
            recs[i] = rfta1_single_shot(cfg, cfg.seed + i);
        }
    };
    const int nthreads = std::max(1, std::min(jobs, cfg.runs));
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SingleShotSummary sum;
    std::vector<double> m1, m2;
    int c1 = 0, c2 = 0;
    for (const auto& rec : recs) {
        m1.push_back(static_cast<double>(rec.rfta1_messages));
        m2.push_back(static_cast<double>(rec.gfgf2_messages));
        if (rec.rfta1_winner == rec.closest_robot) ++c1;
        if (rec.gfgf2_found == rec.closest_robot) ++c2;
    }
    sum.rfta1_msgs = make_stat(m1);
    sum.gfgf2_msgs = make_stat(m2);
    sum.rfta1_closest_rate = static_cast<double>(c1) / cfg.runs;
    sum.gfgf2_closest_rate = static_cast<double>(c2) / cfg.runs;
    return sum;
}

std::vector<std::string> export_topology(const Topology& t, const std::string& prefix) {
    CsvWriter nodes(prefix + "_nodes.csv");
    nodes.row({"id", "x", "y", "energy"});
    for (const Robot& r : t.robots)
        nodes.row({fmt_int(r.id), fmt_num(r.pos.x), fmt_num(r.pos.y), fmt_num(r.energy)});
    CsvWriter edges(prefix + "_edges.csv");
    edges.row({"u", "v"});
    for (const auto& [u, v] : t.edges()) edges.row({fmt_int(u), fmt_int(v)});
    return {nodes.path(), edges.path()};
}

namespace {

std::vector<std::string> preset_fig6_8(const RunOptions& opt) {
    CsvWriter w(join_path(opt.outdir, "fig6_8_rfta1.csv"));
    w.row({"algorithm", "topology", "n", "r", "sr", "runs", "seed", "msgs_mean", "msgs_ci",
           "closest_rate"});
    for (TopologyKind topo : {TopologyKind::Random, TopologyKind::RandomWithHole}) {
        for (double r : kRGrid) {
            SimConfig cfg = base_config(Algorithm::RFTA1, topo, r, 2, opt.seed);
            const SingleShotSummary s = run_single_shots(cfg, opt.jobs);
            const auto common = [&](const char* alg, const Stat& msgs, double rate) {
                w.row({alg, topology_name(topo), fmt_int(cfg.n), fmt_num(r), fmt_num(cfg.sr()),
                       fmt_int(cfg.runs), fmt_int(static_cast<std::int64_t>(cfg.seed)),
                       fmt_num(msgs.mean), fmt_num(msgs.ci), fmt_num(rate)});
            };
            common("rfta1", s.rfta1_msgs, s.rfta1_closest_rate);
            common("gfgf2", s.gfgf2_msgs, s.gfgf2_closest_rate);
        }
    }
    return {join_path(opt.outdir, "fig6_8_rfta1.csv")};
}

std::vector<std::string> preset_fig9_10(const RunOptions& opt) {
    CsvWriter w(join_path(opt.outdir, "fig9_10_baselines.csv"));
    std::vector<SimConfig> grid;
    for (Algorithm alg : {Algorithm::RFTA2, Algorithm::RFTA2GE, Algorithm::GFGF2A,
                          Algorithm::KSAAP, Algorithm::BFS})
        grid.push_back(base_config(alg, TopologyKind::Random, 0.20, 2, opt.seed));
    SimConfig bfs10 = base_config(Algorithm::BFS, TopologyKind::Random, 0.20, 2, opt.seed);
    bfs10.hopmax = 10;
    grid.push_back(bfs10);
    write_aggregate_rows(w, grid, opt);
    return {w.path()};
}

std::vector<std::string> preset_sr_grid(const RunOptions& opt, Algorithm alg,
                                        const std::string& file) {
    CsvWriter w(join_path(opt.outdir, file));
    std::vector<SimConfig> grid;
    for (TopologyKind topo : {TopologyKind::Random, TopologyKind::RandomWithHole})
        for (int mult = 1; mult <= 4; ++mult)
            for (double r : kRGrid) grid.push_back(base_config(alg, topo, r, mult, opt.seed));
    write_aggregate_rows(w, grid, opt);
    return {w.path()};
}

std::vector<std::string> preset_fig15_16(const RunOptions& opt) {
    CsvWriter w(join_path(opt.outdir, "fig15_16_comparison.csv"));
    std::vector<SimConfig> grid;
    for (TopologyKind topo : {TopologyKind::Random, TopologyKind::RandomWithHole})
        for (Algorithm alg : {Algorithm::RFTA2, Algorithm::GFGF2A, Algorithm::RFTA2GE})
            for (double r : kRGrid) grid.push_back(base_config(alg, topo, r, 2, opt.seed));
    write_aggregate_rows(w, grid, opt);
    return {w.path()};
}

std::vector<std::string> preset_table(const RunOptions& opt, TopologyKind topo,
                                      const std::string& file) {
    CsvWriter w(join_path(opt.outdir, file));
    std::vector<SimConfig> grid;
    for (Algorithm alg : {Algorithm::GFGF2A, Algorithm::RFTA2, Algorithm::RFTA2GE})
        grid.push_back(base_config(alg, topo, 0.25, 2, opt.seed));
    write_aggregate_rows(w, grid, opt);
    return {w.path()};
}

std::vector<std::string> preset_lemma1(const RunOptions& opt) {
    CsvWriter w(join_path(opt.outdir, "lemma1_check.csv"));
    w.row({"n", "radius", "bound", "empirical"});
    const int trials = 10000;
    for (double radius : {0.1, 0.2, 0.3, 0.4})
        w.row({fmt_int(100), fmt_num(radius), fmt_num(p_lower_bound(100, radius)),
               fmt_num(monte_carlo_p(100, radius, trials, opt.seed))});
    return {w.path()};
}

std::vector<std::string> preset_lemma2(const RunOptions& opt) {
    CsvWriter w(join_path(opt.outdir, "lemma2_sweep.csv"));
    w.row({"algorithm", "r", "sr_multiplier", "mean_lifetime"});
    for (Algorithm alg : {Algorithm::RFTA2, Algorithm::RFTA2GE})
        for (double r : {0.20, 0.25}) {
            const SimConfig cfg = base_config(alg, TopologyKind::Random, r, 1, opt.seed);
            for (const SrSweepRow& row : sr_sweep(cfg, opt.jobs))
                w.row({algorithm_name(alg), fmt_num(r), fmt_int(row.multiplier),
                       fmt_num(row.mean_lifetime)});
        }
    return {w.path()};
}

}  // namespace

std::vector<std::string> run_preset(const std::string& name, const RunOptions& opt) {
    std::filesystem::create_directories(opt.outdir);
    if (name == "fig6_8_rfta1") return preset_fig6_8(opt);
    if (name == "fig9_10_baselines") return preset_fig9_10(opt);
    if (name == "fig11_12_rfta2") return preset_sr_grid(opt, Algorithm::RFTA2, "fig11_12_rfta2.csv");
    if (name == "fig13_14_rfta2ge")
        return preset_sr_grid(opt, Algorithm::RFTA2GE, "fig13_14_rfta2ge.csv");
    if (name == "fig15_16_comparison") return preset_fig15_16(opt);
    if (name == "table2_random") return preset_table(opt, TopologyKind::Random, "table2_random.csv");
    if (name == "table3_hole") return preset_table(opt, TopologyKind::RandomWithHole, "table3_hole.csv");
    if (name == "lemma1_check") return preset_lemma1(opt);
    if (name == "lemma2_sweep") return preset_lemma2(opt);
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> run_adhoc(const SimConfig& cfg, const RunOptions& opt) {
    std::filesystem::create_directories(opt.outdir);
    std::vector<std::string> files;

    if (cfg.algorithm == Algorithm::RFTA1) {
        const SingleShotSummary s = run_single_shots(cfg, opt.jobs);
        CsvWriter w(join_path(opt.outdir, "single_shot.csv"));
        w.row({"algorithm", "topology", "n", "r", "sr", "runs", "seed", "msgs_mean", "msgs_ci",
               "closest_rate"});
        w.row({"rfta1", topology_name(cfg.topology), fmt_int(cfg.n), fmt_num(cfg.r),
               fmt_num(cfg.sr()), fmt_int(cfg.runs), fmt_int(static_cast<std::int64_t>(cfg.seed)),
               fmt_num(s.rfta1_msgs.mean), fmt_num(s.rfta1_msgs.ci),
               fmt_num(s.rfta1_closest_rate)});
        files.push_back(w.path());
        return files;
    }

    const auto runs = run_many(cfg, opt.jobs);
    {
        CsvWriter w(join_path(opt.outdir, "aggregate.csv"));
        w.row(aggregate_header());
        w.row(aggregate_row(cfg, aggregate(runs, cfg)));
        files.push_back(w.path());
    }
    {
        CsvWriter w(join_path(opt.outdir, "rounds.csv"));
        write_per_round(w, runs);
        files.push_back(w.path());
    }
    if (opt.trace && !runs.empty()) {
        CsvWriter w(join_path(opt.outdir, "trace.csv"));
        write_trace(w, runs.front());
        files.push_back(w.path());
    }
    return files;
}

}  // namespace wsrn
