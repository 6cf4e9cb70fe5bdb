#ifndef WSRN_ANALYSIS_HPP
#define WSRN_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "wsrn/simulator.hpp"

namespace wsrn {

// Worst-case (corner-centered) lower bound on the probability that at least
// one of N-1 further uniform points falls within radius R of a given point in
// the unit square: 1 - (1 - pi R^2 / 4)^(N-1).
double p_lower_bound(int n_points, double radius);

// Empirical probability over `trials` draws of N uniform points that some
// other point lies within R of the first one. Sits above p_lower_bound for a
// uniformly placed center (the bound assumes the corner).
double monte_carlo_p(int n_points, double radius, int trials, std::uint64_t seed);

// One-dimensional experiment sweep: vary the communication radius or the
// search-radius multiplier, holding the rest of the config fixed.
struct SweepSpec {
    enum class Variable { CommRadius, SrMultiplier };
    Variable variable = Variable::SrMultiplier;
    std::vector<double> values; // nonempty, strictly increasing
    SimConfig base;
};

struct SweepRow {
    double value = 0.0;
    SimReport report;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

struct SrSweepRow {
    int multiplier = 0;
    double mean_lifetime = 0.0;
};

// Full lifetime simulation at search-radius multipliers 1..4; the base config
// fixes everything else.
std::vector<SrSweepRow> sr_sweep(const SimConfig& base, int jobs = 1);

struct Lemma4Row {
    int round = 0;
    int edges = 0;         // c
    int faces = 0;         // F = c - n + 1
    double avg_degree = 0.0;
    std::int64_t measured_msgs = 0;
    double estimate = 0.0; // (F + 1) * deg + 2; diagnostic only
};

// Per-round comparison of measured messages against the (F+1)*deg+2 estimate.
// No pass/fail: the estimate is an order-of-magnitude guide, not a bound.
std::vector<Lemma4Row> lemma4_diagnostic(const RunRecord& run, int n);

}  // namespace wsrn

#endif  // WSRN_ANALYSIS_HPP
