#pragma once

#include <map>
#include <string>
#include <vector>

#include "d2d/baselines.hpp"

namespace d2d {

enum class Algorithm { kDsera, kScheme1, kScheme2, kScheme3, kThreeStep, kDenseCell };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws on unknown

RunOutcome run_algorithm(Algorithm a, const NetworkInstance& inst, const DseraConfig& cfg);

// Sum rate divided by the number of served links (CUEs + admitted pairs), or
// by all potential links when over_all is set.
double average_rate(const RunOutcome& out, bool over_all = false);

// A sweep axis: either the number of CUEs N (pairs scale as m_over_n * N) or
// the density M/N at fixed N.
enum class SweepAxis { kNCues, kDensity };

struct ExperimentSpec {
    std::string name = "experiment";
    SweepAxis axis = SweepAxis::kDensity;
    std::vector<int> axis_values;
    int m_over_n = 20;  // pair density used when sweeping N
    int drops = 100;    // independent instances per axis point
    uint64_t base_seed = 1;
    GenParams base_params;
    DseraConfig config;
    std::vector<Algorithm> algorithms;
    bool avg_rate_over_all = false;
    int threads = 0;  // 0: hardware concurrency
};

// One algorithm run on one drop.
struct DropRecord {
    int axis_value = 0;
    int drop = 0;
    Algorithm algorithm = Algorithm::kDsera;
    uint64_t seed = 0;
    double sum_rate = 0.0;
    double avg_rate = 0.0;
    int admitted = 0;
    int m_total = 0;
    int outer_passes = 0;
    long inner_sweeps = 0;
    double wall_ms = 0.0;
    bool qos_satisfied = false;
    bool structurally_infeasible = false;
};

struct PointStats {
    double mean_sum_rate = 0.0;
    double std_sum_rate = 0.0;  // sample standard deviation
    double mean_avg_rate = 0.0;
    double std_avg_rate = 0.0;
    double admitted_fraction = 0.0;
    double mean_outer_passes = 0.0;
    double mean_inner_sweeps = 0.0;
    double mean_wall_ms = 0.0;
    int n = 0;
};

struct RunReport {
    ExperimentSpec spec;
    std::vector<DropRecord> drops;  // ordered by (axis point, drop, algorithm)
    std::map<std::pair<int, Algorithm>, PointStats> stats;
};

// Runs drops x axis_values x algorithms. Every (point, drop) uses the seed
// derive_seed(base_seed, point_index, drop_index); all algorithms at a given
// (point, drop) see the identical instance, so cross-algorithm comparisons
// are paired. Drops run in a small work pool; aggregation order is fixed by
// index, not completion time.
RunReport run_experiment(const ExperimentSpec& spec);

PointStats aggregate(const std::vector<DropRecord>& records, int axis_value, Algorithm a);

// Writes <name>.csv per-figure style data (axis, algorithm, mean, std, n),
// one drops.csv with every record, and report.json with the spec and stats.
// `metric` picks the mean column: "sum_rate" or "avg_rate".
void emit_plot_data(const RunReport& report, const std::string& dir, const std::string& metric);

}  // namespace d2d
