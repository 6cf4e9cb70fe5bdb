#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "wsrn/presets.hpp"

namespace {

std::string preset_help() {
    std::string s = "Experiment preset to run. One of:";
    for (const auto& p : wsrn::preset_list()) s += "\n  " + p.name + ": " + p.description;
    return s;
}

wsrn::Algorithm parse_algorithm(const std::string& name) {
    if (name == "gfgf2a") return wsrn::Algorithm::GFGF2A;
    if (name == "rfta1") return wsrn::Algorithm::RFTA1;
    if (name == "rfta2") return wsrn::Algorithm::RFTA2;
    if (name == "rfta2ge") return wsrn::Algorithm::RFTA2GE;
    if (name == "ksaap") return wsrn::Algorithm::KSAAP;
    if (name == "bfs") return wsrn::Algorithm::BFS;
    throw CLI::ValidationError("--algorithm",
                               "unknown algorithm '" + name +
                                   "' (expected gfgf2a|rfta1|rfta2|rfta2ge|ksaap|bfs)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wsrn-sim: task-allocation simulator for wireless sensor and robot networks.\n"
        "Greedy-face-greedy routing with a search-radius stop, localized auctions,\n"
        "and hop-bounded auction baselines over Gabriel-graph topologies."};

    std::string preset;
    std::string algorithm = "rfta2";
    std::string topology = "random";
    std::string outdir = ".";
    std::string export_prefix;
    std::string hand = "right";
    wsrn::SimConfig cfg;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    bool trace = false;

    app.add_option("--preset", preset, preset_help());
    app.add_option("--algorithm", algorithm,
                   "Algorithm for an ad-hoc run: gfgf2a|rfta1|rfta2|rfta2ge|ksaap|bfs");
    app.add_option("--n", cfg.n, "Number of robots")->check(CLI::PositiveNumber);
    app.add_option("--r", cfg.r, "Communication radius (unit-square units)")
        ->check(CLI::Range(0.0, 1.4142135623730951));
    app.add_option("--sr-mult", cfg.sr_multiplier, "Search-radius multiplier (SR = 0.1 x mult)")
        ->check(CLI::Range(1, 4));
    app.add_option("--topology", topology, "random | hole");
    app.add_option("--k", cfg.k, "Hop bound for ksaap")->check(CLI::PositiveNumber);
    app.add_option("--hopmax", cfg.hopmax, "Tree depth for bfs")->check(CLI::PositiveNumber);
    app.add_option("--runs", cfg.runs, "Independent runs (seeds seed..seed+runs-1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Base seed");
    app.add_option("--out", outdir, "Output directory for CSV files");
    app.add_option("--jobs", jobs, "Worker threads (output independent of this)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--trace", trace, "Also dump the first run's hop traces (round,step,node_id,mode)");
    app.add_option("--hand-rule", hand, "Face traversal hand rule: right | left");
    app.add_option("--export-topology", export_prefix,
                   "Write a deployment snapshot to <prefix>_nodes.csv/<prefix>_edges.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.algorithm = parse_algorithm(algorithm);
        if (topology == "random")
            cfg.topology = wsrn::TopologyKind::Random;
        else if (topology == "hole")
            cfg.topology = wsrn::TopologyKind::RandomWithHole;
        else
            throw CLI::ValidationError("--topology", "expected 'random' or 'hole'");
        if (hand == "right")
            cfg.hand_rule = wsrn::HandRule::Right;
        else if (hand == "left")
            cfg.hand_rule = wsrn::HandRule::Left;
        else
            throw CLI::ValidationError("--hand-rule", "expected 'right' or 'left'");

        wsrn::RunOptions opt;
        opt.outdir = outdir;
        opt.seed = cfg.seed;
        opt.jobs = jobs;
        opt.trace = trace;

        std::vector<std::string> files;
        if (!export_prefix.empty()) {
            wsrn::Rng rng(cfg.seed);
            const wsrn::Topology t =
                wsrn::generate_topology(cfg.topology_config(), rng, cfg.energy.initial_energy);
            for (auto& f : wsrn::export_topology(t, export_prefix)) files.push_back(f);
        }
        if (!preset.empty()) {
            for (auto& f : wsrn::run_preset(preset, opt)) files.push_back(f);
        } else if (export_prefix.empty()) {
            for (auto& f : wsrn::run_adhoc(cfg, opt)) files.push_back(f);
        }
        for (const auto& f : files) std::cout << f << "\n";
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
