#include "wsrn/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "wsrn/rng.hpp"

namespace wsrn {

double p_lower_bound(int n_points, double radius) {
    if (n_points < 2) throw std::invalid_argument("p_lower_bound: need N >= 2");
    if (radius < 0.0 || radius > 1.0) throw std::invalid_argument("p_lower_bound: R in [0,1]");
    const double pi = 3.14159265358979323846;
    const double p_out = 1.0 - pi * radius * radius / 4.0;
    return 1.0 - std::pow(p_out, n_points - 1);
}

double monte_carlo_p(int n_points, double radius, int trials, std::uint64_t seed) {
    if (trials < 1000) throw std::invalid_argument("monte_carlo_p: need >= 1000 trials");
    Rng rng(seed);
    const double r2 = radius * radius;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        const Point center{rng.uniform01(), rng.uniform01()};
        bool found = false;
        for (int i = 1; i < n_points; ++i) {
            const Point p{rng.uniform01(), rng.uniform01()};
            if (!found && distance2(p, center) <= r2) found = true;
        }
        if (found) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
    if (spec.values.empty()) throw std::invalid_argument("run_sweep: empty value list");
    for (std::size_t i = 1; i < spec.values.size(); ++i)
        if (spec.values[i] <= spec.values[i - 1])
            throw std::invalid_argument("run_sweep: values must be strictly increasing");
    std::vector<SweepRow> rows;
    for (double v : spec.values) {
        SimConfig cfg = spec.base;
        if (spec.variable == SweepSpec::Variable::CommRadius)
            cfg.r = v;
        else
            cfg.sr_multiplier = static_cast<int>(v);
        const auto runs = run_many(cfg, jobs);
        rows.push_back({v, aggregate(runs, cfg)});
    }
    return rows;
}

std::vector<SrSweepRow> sr_sweep(const SimConfig& base, int jobs) {
    if (base.algorithm != Algorithm::RFTA2 && base.algorithm != Algorithm::RFTA2GE)
        throw std::invalid_argument("sr_sweep applies to rfta2/rfta2ge only");
    SweepSpec spec;
    spec.variable = SweepSpec::Variable::SrMultiplier;
    spec.values = {1, 2, 3, 4};
    spec.base = base;
    std::vector<SrSweepRow> rows;
    for (const SweepRow& row : run_sweep(spec, jobs))
        rows.push_back({static_cast<int>(row.value), row.report.anl.mean});
    return rows;
}

std::vector<Lemma4Row> lemma4_diagnostic(const RunRecord& run, int n) {
    std::vector<Lemma4Row> rows;
    rows.reserve(run.rounds.size());
    for (const RoundRecord& rd : run.rounds) {
        Lemma4Row row;
        row.round = rd.round_index;
        row.edges = rd.edges_before;
        row.faces = rd.edges_before - n + 1;
        row.avg_degree = 2.0 * rd.edges_before / static_cast<double>(n);
        row.measured_msgs = rd.result.total_messages;
        row.estimate = (row.faces + 1) * row.avg_degree + 2.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wsrn
