#include "d2d/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <thread>

#include "d2d/rng.hpp"
#include "d2d/serialize.hpp"

namespace d2d {

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kDsera: return "dsera";
        case Algorithm::kScheme1: return "scheme1";
        case Algorithm::kScheme2: return "scheme2";
        case Algorithm::kScheme3: return "scheme3";
        case Algorithm::kThreeStep: return "3step";
        case Algorithm::kDenseCell: return "densecell";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    for (Algorithm a : {Algorithm::kDsera, Algorithm::kScheme1, Algorithm::kScheme2,
                        Algorithm::kScheme3, Algorithm::kThreeStep, Algorithm::kDenseCell})
        if (name == algorithm_name(a)) return a;
    throw std::invalid_argument("unknown algorithm: " + name);
}

RunOutcome run_algorithm(Algorithm a, const NetworkInstance& inst, const DseraConfig& cfg) {
    switch (a) {
        case Algorithm::kDsera: return run_dsera(inst, cfg);
        case Algorithm::kScheme1: return run_scheme1(inst, cfg);
        case Algorithm::kScheme2: return run_scheme2(inst, cfg);
        case Algorithm::kScheme3: return run_scheme3(inst, cfg);
        case Algorithm::kThreeStep: return run_3step(inst, cfg);
        case Algorithm::kDenseCell: return run_densecell(inst, cfg);
    }
    throw std::invalid_argument("unknown algorithm enum");
}

double average_rate(const RunOutcome& out, bool over_all) {
    const int n = static_cast<int>(out.cue_rates.size());
    const int m = static_cast<int>(out.d2d_rates.size());
    const int denom = over_all ? n + m : n + out.admitted;
    return denom > 0 ? out.sum_rate / denom : 0.0;
}

namespace {

void instance_dims(const ExperimentSpec& spec, int axis_value, int* n, int* m) {
    if (spec.axis == SweepAxis::kNCues) {
        *n = axis_value;
        *m = axis_value * spec.m_over_n;
    } else {
        *n = spec.base_params.n_cues;
        *m = axis_value * spec.base_params.n_cues;
    }
}

}  // namespace

RunReport run_experiment(const ExperimentSpec& spec) {
    if (spec.axis_values.empty()) throw std::invalid_argument("run_experiment: no axis values");
    if (spec.algorithms.empty()) throw std::invalid_argument("run_experiment: no algorithms");
    if (spec.drops <= 0) throw std::invalid_argument("run_experiment: drops must be positive");

    RunReport report;
    report.spec = spec;
    const int points = static_cast<int>(spec.axis_values.size());
    const int algs = static_cast<int>(spec.algorithms.size());
    report.drops.resize(static_cast<size_t>(points) * spec.drops * algs);

    // Work unit: one (point, drop): generate the instance once, run every
    // algorithm on it. Records land at fixed indices regardless of timing.
    std::atomic<int> next{0};
    const int total_units = points * spec.drops;
    auto worker = [&]() {
        for (;;) {
            const int unit = next.fetch_add(1);
            if (unit >= total_units) return;
            const int pt = unit / spec.drops;
            const int drop = unit % spec.drops;

            GenParams gp = spec.base_params;
            instance_dims(spec, spec.axis_values[pt], &gp.n_cues, &gp.m_d2d);
            gp.rng_seed = derive_seed(spec.base_seed, pt, drop);
            const NetworkInstance inst = generate(gp);

            for (int a = 0; a < algs; ++a) {
                const RunOutcome out = run_algorithm(spec.algorithms[a], inst, spec.config);
                DropRecord rec;
                rec.axis_value = spec.axis_values[pt];
                rec.drop = drop;
                rec.algorithm = spec.algorithms[a];
                rec.seed = gp.rng_seed;
                rec.sum_rate = out.sum_rate;
                rec.avg_rate = average_rate(out, spec.avg_rate_over_all);
                rec.admitted = out.admitted;
                rec.m_total = inst.m_d2d();
                rec.outer_passes = out.outer_passes;
                rec.inner_sweeps = out.inner_sweeps;
                rec.wall_ms = out.wall_ms;
                rec.qos_satisfied = out.qos_satisfied;
                rec.structurally_infeasible = out.structurally_infeasible;
                report.drops[(static_cast<size_t>(pt) * spec.drops + drop) * algs + a] = rec;
            }
        }
    };

    int threads = spec.threads > 0 ? spec.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, total_units));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (int pt = 0; pt < points; ++pt)
        for (int a = 0; a < algs; ++a)
            report.stats[{spec.axis_values[pt], spec.algorithms[a]}] =
                aggregate(report.drops, spec.axis_values[pt], spec.algorithms[a]);
    return report;
}

PointStats aggregate(const std::vector<DropRecord>& records, int axis_value, Algorithm a) {
    PointStats s;
    double sum = 0.0, sum2 = 0.0, asum = 0.0, asum2 = 0.0;
    double admitted = 0.0, mtotal = 0.0, outer = 0.0, inner = 0.0, wall = 0.0;
    for (const DropRecord& r : records) {
        if (r.axis_value != axis_value || r.algorithm != a) continue;
        ++s.n;
        sum += r.sum_rate;
        sum2 += r.sum_rate * r.sum_rate;
        asum += r.avg_rate;
        asum2 += r.avg_rate * r.avg_rate;
        admitted += r.admitted;
        mtotal += r.m_total;
        outer += r.outer_passes;
        inner += static_cast<double>(r.inner_sweeps);
        wall += r.wall_ms;
    }
    if (s.n == 0) return s;
    s.mean_sum_rate = sum / s.n;
    s.mean_avg_rate = asum / s.n;
    if (s.n > 1) {
        s.std_sum_rate = std::sqrt(std::max(0.0, (sum2 - sum * sum / s.n) / (s.n - 1)));
        s.std_avg_rate = std::sqrt(std::max(0.0, (asum2 - asum * asum / s.n) / (s.n - 1)));
    }
    s.admitted_fraction = mtotal > 0.0 ? admitted / mtotal : 0.0;
    s.mean_outer_passes = outer / s.n;
    s.mean_inner_sweeps = inner / s.n;
    s.mean_wall_ms = wall / s.n;
    return s;
}

void emit_plot_data(const RunReport& report, const std::string& dir, const std::string& metric) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    const bool use_avg = metric == "avg_rate";
    if (!use_avg && metric != "sum_rate")
        throw std::invalid_argument("emit_plot_data: metric must be sum_rate or avg_rate");

    {
        const fs::path p = fs::path(dir) / (report.spec.name + ".csv");
        std::FILE* f = std::fopen(p.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + p.string());
        std::fprintf(f, "axis,algorithm,mean,std,n\n");
        for (int v : report.spec.axis_values) {
            for (Algorithm a : report.spec.algorithms) {
                const PointStats& s = report.stats.at({v, a});
                std::fprintf(f, "%d,%s,%.9g,%.9g,%d\n", v, algorithm_name(a),
                             use_avg ? s.mean_avg_rate : s.mean_sum_rate,
                             use_avg ? s.std_avg_rate : s.std_sum_rate, s.n);
            }
        }
        std::fclose(f);
    }
    {
        const fs::path p = fs::path(dir) / (report.spec.name + "_drops.csv");
        std::FILE* f = std::fopen(p.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + p.string());
        std::fprintf(f, "axis,drop,algorithm,seed,sum_rate,avg_rate,admitted,m_total,"
                        "outer_passes,inner_sweeps,wall_ms,qos_satisfied,structurally_infeasible\n");
        for (const DropRecord& r : report.drops) {
            std::fprintf(f, "%d,%d,%s,%llu,%.12g,%.12g,%d,%d,%d,%ld,%.3f,%d,%d\n", r.axis_value,
                         r.drop, algorithm_name(r.algorithm),
                         static_cast<unsigned long long>(r.seed), r.sum_rate, r.avg_rate,
                         r.admitted, r.m_total, r.outer_passes, r.inner_sweeps, r.wall_ms,
                         r.qos_satisfied ? 1 : 0, r.structurally_infeasible ? 1 : 0);
        }
        std::fclose(f);
    }
    {
        const fs::path p = fs::path(dir) / (report.spec.name + "_report.json");
        std::FILE* f = std::fopen(p.c_str(), "w");
        if (!f) throw std::runtime_error("cannot write " + p.string());
        const std::string j = report_to_json(report, metric);
        std::fwrite(j.data(), 1, j.size(), f);
        std::fclose(f);
    }
}

}  // namespace d2d
