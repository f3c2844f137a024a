#include <benchmark/benchmark.h>

#include "d2d/dsera.hpp"
#include "d2d/oracle.hpp"

namespace {

d2d::NetworkInstance make_instance(int n, int m, uint64_t seed) {
    d2d::GenParams gp;
    gp.n_cues = n;
    gp.m_d2d = m;
    gp.rng_seed = seed;
    return d2d::generate(gp);
}

void BM_generate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_instance(n, m, seed++));
    }
}
BENCHMARK(BM_generate)->Args({10, 40})->Args({10, 200});

void BM_closed_form_power(benchmark::State& state) {
    double gamma = 3.7, q = 0.21, p_max = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d2d::closed_form_power(q, gamma, p_max));
        gamma += 1e-9;  // defeat value caching
    }
}
BENCHMARK(BM_closed_form_power);

void BM_grid_best_power(benchmark::State& state) {
    const double step = 2.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(d2d::grid_best_power(3.7, 0.0, 2.0, step));
    }
}
BENCHMARK(BM_grid_best_power)->Arg(1000)->Arg(100000);

void BM_game_sweep(benchmark::State& state) {
    const d2d::NetworkInstance inst =
        make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
    const d2d::CostModel cost = d2d::build_cost_model(inst, 3.76);
    d2d::GameState st = d2d::make_initial_state(inst, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(d2d::game_sweep(inst, cost, st));
    }
}
BENCHMARK(BM_game_sweep)->Args({10, 40})->Args({10, 200});

void BM_run_dsera(benchmark::State& state) {
    const d2d::NetworkInstance inst =
        make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
    d2d::DseraConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d2d::run_dsera(inst, cfg));
    }
}
BENCHMARK(BM_run_dsera)->Args({4, 16})->Args({10, 100})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
