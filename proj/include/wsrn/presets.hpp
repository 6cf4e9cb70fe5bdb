#ifndef WSRN_PRESETS_HPP
#define WSRN_PRESETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wsrn/analysis.hpp"
#include "wsrn/simulator.hpp"

namespace wsrn {

struct PresetSpec {
    std::string name;
    std::string description;
};

// The canned experiment grids, named after the figures/tables of the
// reference experiment protocol they reproduce.
const std::vector<PresetSpec>& preset_list();

struct RunOptions {
    std::string outdir = ".";
    std::uint64_t seed = 0;
    int jobs = 1;
    bool trace = false;
};

// Executes a named preset and returns the paths written.
// Throws std::invalid_argument for an unknown name.
std::vector<std::string> run_preset(const std::string& name, const RunOptions& opt);

// One ad-hoc configuration: aggregate row, per-round detail rows, and an
// optional hop-trace dump of the first run.
std::vector<std::string> run_adhoc(const SimConfig& cfg, const RunOptions& opt);

// Snapshot of a deployment: <prefix>_nodes.csv (id,x,y,energy) and
// <prefix>_edges.csv (u,v).
std::vector<std::string> export_topology(const Topology& t, const std::string& prefix);

std::vector<std::string> aggregate_header();
std::vector<std::string> aggregate_row(const SimConfig& cfg, const SimReport& rep);

// 100 single-shot routings (fresh network each) for the distance-metric
// protocol: message means and closest-robot rates for the auction and for
// the bare routing.
struct SingleShotSummary {
    Stat rfta1_msgs;
    Stat gfgf2_msgs;
    double rfta1_closest_rate = 0.0;
    double gfgf2_closest_rate = 0.0;
};

SingleShotSummary run_single_shots(const SimConfig& cfg, int jobs);

}  // namespace wsrn

#endif  // WSRN_PRESETS_HPP
