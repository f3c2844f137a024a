#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "d2d/oracle.hpp"
#include "d2d/rng.hpp"
#include "d2d/units.hpp"
#include "test_util.hpp"

using namespace d2d;
using d2d_test::FlatSpec;
using d2d_test::flat_instance;
using d2d_test::realistic;

namespace {

// Literal reference: evaluate the payoff at every point of the same grid
// (k*step for k = 0..floor(p_max/step)) with the log formula and keep the
// first global maximum. Slow on purpose and free of the incremental rewrite.
double literal_grid_argmax(double gamma, double q, double p_max, double step) {
    const long n = static_cast<long>(std::floor(p_max / step + 1e-9));
    double best_p = 0.0, best_f = 0.0;
    for (long k = 0; k <= n; ++k) {
        const double p = static_cast<double>(k) * step;
        const double f = std::log2(1.0 + p * gamma) - p * q;
        if (f > best_f) {
            best_f = f;
            best_p = p;
        }
    }
    return best_p;
}

}  // namespace

TEST_CASE("grid argmax agrees with a literal log-evaluating scan") {
    Rng rng(404);
    for (int t = 0; t < 300; ++t) {
        const double gamma = std::exp(rng.uniform() * 8.0 - 2.0);   // ~[0.14, 400]
        const double q = std::exp(rng.uniform() * 10.0 - 6.0);      // ~[0.0025, 55]
        const double p_max = 0.5 + rng.uniform() * 4.0;
        const double step = p_max / 400.0;
        CAPTURE(gamma);
        CAPTURE(q);
        CAPTURE(p_max);
        CHECK(grid_best_power(gamma, q, p_max, step) ==
              literal_grid_argmax(gamma, q, p_max, step));
    }
}

TEST_CASE("grid argmax endpoints: free power caps out, ruinous price shuts off") {
    CHECK(grid_best_power(3.0, 0.0, 2.0, 0.01) == 2.0);
    CHECK(grid_best_power(1e-6, 100.0, 2.0, 0.01) == 0.0);
}

TEST_CASE("closed form lands within one grid step of the scanned argmax") {
    Rng rng(405);
    for (int t = 0; t < 300; ++t) {
        const double gamma = std::exp(rng.uniform() * 8.0 - 2.0);
        const double q = std::exp(rng.uniform() * 10.0 - 6.0);
        const double p_max = 0.5 + rng.uniform() * 4.0;
        const double step = p_max / 2000.0;
        const double scanned = grid_best_power(gamma, q, p_max, step);
        const double closed = closed_form_power(q, gamma, p_max);
        CAPTURE(gamma);
        CAPTURE(q);
        CHECK(std::abs(scanned - closed) <= step + 1e-12);
    }
}

TEST_CASE("a converged sweep state reports no profitable grid deviation") {
    const NetworkInstance inst = flat_instance(FlatSpec{});
    const double alpha = 3.76;
    const CostModel cost = build_cost_model(inst, alpha);
    GameState st = make_initial_state(inst, 0.01);
    for (int s = 0; s < 400; ++s) {
        int sw = 0;
        if (game_sweep(inst, cost, st, &sw) <= 1e-13 && sw == 0) break;
    }
    const DeviationReport rep = verify_equilibrium(inst, alpha, st.alloc, st.prices, 1e-3);
    CHECK(rep.max_improvement < 1e-6);
}

TEST_CASE("a planted off-equilibrium move is detected and attributed") {
    const NetworkInstance inst = flat_instance(FlatSpec{});
    const double alpha = 3.76;
    const CostModel cost = build_cost_model(inst, alpha);
    GameState st = make_initial_state(inst, 0.01);
    for (int s = 0; s < 400; ++s) {
        int sw = 0;
        if (game_sweep(inst, cost, st, &sw) <= 1e-13 && sw == 0) break;
    }
    REQUIRE(st.alloc.cue_power[0] > 0.2);
    st.alloc.cue_power[0] *= 0.25;  // knock CUE 0 off its best response
    const DeviationReport rep = verify_equilibrium(inst, alpha, st.alloc, st.prices, 1e-3);
    CHECK(rep.max_improvement > 1e-4);
    CHECK(rep.player_is_cue);
    CHECK(rep.player == 0);
}

TEST_CASE("exhaustive search rejects sizes beyond its guard") {
    CHECK_THROWS_AS((void)exhaustive_small(realistic(4, 2, 1), 8), std::invalid_argument);
    CHECK_THROWS_AS((void)exhaustive_small(realistic(2, 6, 1), 8), std::invalid_argument);
    CHECK_THROWS_AS((void)exhaustive_small(realistic(2, 2, 1), 64), std::invalid_argument);
    CHECK_THROWS_AS((void)exhaustive_small(realistic(3, 5, 1), 33), std::invalid_argument);
    CHECK_THROWS_AS((void)exhaustive_small(realistic(2, 2, 1), 1), std::invalid_argument);
}

namespace {

// Fully joint reference enumeration: every assignment of pairs to channels or
// parking, and every joint power tuple over all transmitters at once. No
// per-channel decomposition anywhere — that is the production shortcut this
// cross-checks.
ExhaustiveResult joint_reference(const NetworkInstance& inst, int grid_points) {
    const int n = inst.n_cues(), m = inst.m_d2d();
    ExhaustiveResult out;
    out.best_alloc = zero_allocation(inst);

    std::vector<int> assign(m, 0);  // values 0..n (n == parked)
    for (;;) {
        Allocation a = zero_allocation(inst);
        for (int j = 0; j < m; ++j) a.channel_of[j] = assign[j];

        std::vector<int> lvl(n + m, 0);
        for (;;) {
            bool dup = false;
            for (int i = 0; i < n; ++i)
                a.cue_power[i] = inst.cue_p_max[i] * lvl[i] / (grid_points - 1);
            for (int j = 0; j < m; ++j) {
                if (a.channel_of[j] == n && lvl[n + j] != 0) dup = true;  // parked: only p=0
                a.d2d_power[j] =
                    a.channel_of[j] == n ? 0.0 : inst.d2d_p_max[j] * lvl[n + j] / (grid_points - 1);
            }
            if (!dup) {
                bool ok = true;
                for (int i = 0; i < n && ok; ++i)
                    ok = sinr_cue(inst, a, i) >= inst.cue_sinr_min[i];
                for (int j = 0; j < m && ok; ++j)
                    if (a.channel_of[j] != n) ok = sinr_d2d(inst, a, j) >= inst.d2d_sinr_min[j];
                if (ok) {
                    const double sr = sum_rate(inst, a);
                    if (!out.feasible || sr > out.best_sum_rate) {
                        out.feasible = true;
                        out.best_sum_rate = sr;
                        out.best_alloc = a;
                    }
                }
            }
            int d = 0;
            while (d < n + m && ++lvl[d] == grid_points) lvl[d++] = 0;
            if (d == n + m) break;
        }
        int d = 0;
        while (d < m && ++assign[d] == n + 1) assign[d++] = 0;
        if (d == m) break;
    }
    return out;
}

}  // namespace

TEST_CASE("per-channel decomposition matches a fully joint enumeration") {
    FlatSpec s;
    s.n = 2;
    s.m = 2;
    const NetworkInstance flat = flat_instance(s);
    const NetworkInstance gen = realistic(2, 2, 3);
    for (const NetworkInstance* inst : {&flat, &gen}) {
        const ExhaustiveResult fast = exhaustive_small(*inst, 5);
        const ExhaustiveResult slow = joint_reference(*inst, 5);
        REQUIRE(fast.feasible == slow.feasible);
        if (fast.feasible)
            CHECK(fast.best_sum_rate == doctest::Approx(slow.best_sum_rate).epsilon(1e-12));
    }
}

TEST_CASE("impossible floors come back infeasible") {
    FlatSpec s;
    s.n = 2;
    s.m = 2;
    s.cue_sinr_min = 1e9;
    const NetworkInstance inst = flat_instance(s);
    const ExhaustiveResult res = exhaustive_small(inst, 5);
    CHECK_FALSE(res.feasible);
}

TEST_CASE("exhaustive optimum on the pinned fixture") {
    const NetworkInstance inst = realistic(2, 3, 9);
    const ExhaustiveResult res = exhaustive_small(inst, 16);
    REQUIRE(res.feasible);
    CHECK_NOTHROW(validate_allocation(inst, res.best_alloc));
    CHECK(res.best_sum_rate == doctest::Approx(sum_rate(inst, res.best_alloc)).epsilon(1e-12));
    // Regression pin: derived from this exhaustive search, frozen here.
    CHECK(res.best_sum_rate == doctest::Approx(46.438940969522875).epsilon(1e-9));
}
