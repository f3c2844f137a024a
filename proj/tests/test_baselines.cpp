#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "d2d/baselines.hpp"
#include "d2d/matching.hpp"
#include "d2d/rng.hpp"
#include "d2d/units.hpp"
#include "test_util.hpp"

using namespace d2d;
using d2d_test::FlatSpec;
using d2d_test::flat_instance;
using d2d_test::realistic;

namespace {

// Brute-force optimum: pad to square with zeros and try every permutation.
double brute_force_matching_value(const Mat& w) {
    const int s = std::max(w.rows(), w.cols());
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0.0;
    do {
        double total = 0.0;
        for (int r = 0; r < s; ++r)
            if (r < w.rows() && perm[r] < w.cols()) total += w(r, perm[r]);
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double matching_value(const Mat& w, const std::vector<int>& match) {
    double total = 0.0;
    for (int r = 0; r < w.rows(); ++r)
        if (match[r] >= 0) total += w(r, match[r]);
    return total;
}

double solo_sum_rate(const NetworkInstance& inst) {
    Allocation a = zero_allocation(inst);
    for (int i = 0; i < inst.n_cues(); ++i) a.cue_power[i] = inst.cue_p_max[i];
    return sum_rate(inst, a);
}

void check_same(const RunOutcome& a, const RunOutcome& b) {
    CHECK(a.alloc.cue_power == b.alloc.cue_power);
    CHECK(a.alloc.d2d_power == b.alloc.d2d_power);
    CHECK(a.alloc.channel_of == b.alloc.channel_of);
    CHECK(a.sum_rate == b.sum_rate);
}

}  // namespace

TEST_CASE("matching and brute force agree on every small random matrix") {
    Rng rng(808);
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + static_cast<int>(rng.uniform() * 5.0);
        const int c = 1 + static_cast<int>(rng.uniform() * 5.0);
        Mat w(r, c, 0.0);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b) w(a, b) = rng.uniform() * 10.0;
        const std::vector<int> match = max_weight_matching(w);
        // structural sanity: values in range, columns used at most once
        std::vector<int> used(c, 0);
        for (int a = 0; a < r; ++a) {
            if (match[a] < 0) continue;
            REQUIRE(match[a] < c);
            REQUIRE(++used[match[a]] == 1);
        }
        CAPTURE(r);
        CAPTURE(c);
        CHECK(matching_value(w, match) ==
              doctest::Approx(brute_force_matching_value(w)).epsilon(1e-9));
    }
}

TEST_CASE("matching handles degenerate shapes") {
    Mat one(1, 1, 0.0);
    const std::vector<int> m1 = max_weight_matching(one);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] <= 0);  // zero-weight match or unmatched, both value 0

    Mat wide(2, 4, 1.0);
    const std::vector<int> m2 = max_weight_matching(wide);
    CHECK(matching_value(wide, m2) == doctest::Approx(2.0));
}

TEST_CASE("three step: one pair per channel, floors honored, uplift only") {
    const NetworkInstance inst = realistic(6, 10, 33);
    REQUIRE_FALSE(structurally_infeasible(inst));
    DseraConfig cfg;
    const RunOutcome out = run_3step(inst, cfg);

    CHECK_NOTHROW(validate_allocation(inst, out.alloc));
    std::vector<int> per_channel(inst.n_cues(), 0);
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (out.alloc.admitted(j)) ++per_channel[out.alloc.channel_of[j]];
    for (int i = 0; i < inst.n_cues(); ++i) CHECK(per_channel[i] <= 1);

    CHECK(out.qos_satisfied);
    CHECK(qos_satisfied(inst, out.alloc));
    CHECK(out.sum_rate == doctest::Approx(sum_rate(inst, out.alloc)).epsilon(1e-12));
    CHECK(out.sum_rate >= solo_sum_rate(inst) - 1e-9);

    // channels without a matched pair keep their CUE at full power
    for (int i = 0; i < inst.n_cues(); ++i) {
        if (per_channel[i] == 0) CHECK(out.alloc.cue_power[i] == inst.cue_p_max[i]);
    }

    check_same(out, run_3step(inst, cfg));
}

TEST_CASE("three step on an instance with more pairs than channels") {
    const NetworkInstance inst = realistic(3, 9, 14);
    DseraConfig cfg;
    const RunOutcome out = run_3step(inst, cfg);
    CHECK(out.admitted <= inst.n_cues());
    CHECK_NOTHROW(validate_allocation(inst, out.alloc));
}

TEST_CASE("cost schemes pin every cue at full power") {
    const NetworkInstance inst = realistic(4, 12, 7);
    DseraConfig cfg;
    for (const RunOutcome& out : {run_scheme1(inst, cfg), run_scheme2(inst, cfg)}) {
        CHECK_NOTHROW(validate_allocation(inst, out.alloc));
        for (int i = 0; i < inst.n_cues(); ++i)
            CHECK(out.alloc.cue_power[i] == inst.cue_p_max[i]);
        CHECK(out.qos_satisfied == qos_satisfied(inst, out.alloc));
        CHECK(out.sum_rate == doctest::Approx(sum_rate(inst, out.alloc)).epsilon(1e-12));
    }
    check_same(run_scheme1(inst, cfg), run_scheme1(inst, cfg));
    check_same(run_scheme2(inst, cfg), run_scheme2(inst, cfg));
}

TEST_CASE("ruinous prices drive the closed-form power to zero: un-admission") {
    const NetworkInstance inst = realistic(4, 12, 7);
    DseraConfig cfg;
    cfg.pricing.theta_init = 1e15;  // cost rate above gain/ln2 on every channel
    const RunOutcome s1 = run_scheme1(inst, cfg);
    const RunOutcome s2 = run_scheme2(inst, cfg);
    CHECK(s1.admitted == 0);
    CHECK(s2.admitted == 0);
}

TEST_CASE("pairs take the lowest-cost channel") {
    // With uniform initial prices, scheme 1's cost rate per channel is
    // price * h_bs / h_cue, so the single pair's first-pass choice is the
    // channel whose CUE link is strongest.
    const NetworkInstance inst = realistic(4, 1, 19);
    DseraConfig cfg;
    cfg.max_outer_passes = 1;  // freeze the uniform-price snapshot
    const RunOutcome out = run_scheme1(inst, cfg);
    int best = 0;
    for (int i = 1; i < inst.n_cues(); ++i)
        if (inst.gain_cue[i] > inst.gain_cue[best]) best = i;
    REQUIRE(out.admitted == 1);
    CHECK(out.alloc.channel_of[0] == best);
    CHECK(out.alloc.d2d_power[0] > 0.0);
}

TEST_CASE("zero initial prices are rejected up front") {
    // Multiplicative updates can never lift a price off zero, so the
    // parameter check refuses the configuration instead of running with it.
    const NetworkInstance inst = realistic(4, 8, 7);
    DseraConfig cfg;
    cfg.pricing.theta_init = 0.0;
    CHECK_THROWS_AS(run_scheme1(inst, cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_dsera(inst, cfg), std::invalid_argument);
}

TEST_CASE("moderate prices admit pairs at the closed-form power") {
    FlatSpec s;
    s.n = 2;
    s.m = 3;
    const NetworkInstance inst = flat_instance(s);
    DseraConfig cfg;
    const RunOutcome out = run_scheme1(inst, cfg);
    CHECK(out.admitted > 0);
}

TEST_CASE("schemes respect the pass budget") {
    const NetworkInstance inst = realistic(4, 12, 7);
    DseraConfig cfg;
    cfg.max_outer_passes = 2;
    const RunOutcome out = run_scheme2(inst, cfg);
    CHECK(out.outer_passes <= 2);
}

TEST_CASE("dense cell: every admission keeps the whole group feasible") {
    for (uint64_t seed : {7ULL, 33ULL, 99ULL}) {
        const NetworkInstance inst = realistic(4, 12, seed);
        if (structurally_infeasible(inst)) continue;
        DseraConfig cfg;
        const RunOutcome out = run_densecell(inst, cfg);
        CAPTURE(seed);
        CHECK_NOTHROW(validate_allocation(inst, out.alloc));
        CHECK(out.qos_satisfied);
        CHECK(out.sum_rate >= solo_sum_rate(inst) - 1e-9);
        CHECK(out.outer_passes == out.admitted);  // one admission per step
        check_same(out, run_densecell(inst, cfg));
    }
}

TEST_CASE("dense cell can pack multiple pairs onto one channel") {
    // A single channel and well-separated cheap pairs: sharing should win.
    FlatSpec s;
    s.n = 1;
    s.m = 3;
    s.gain_d2d_bs = 1e-4;
    s.gain_cue_d2d = 1e-3;
    s.gain_d2d_d2d = 1e-4;
    const NetworkInstance inst = flat_instance(s);
    DseraConfig cfg;
    const RunOutcome out = run_densecell(inst, cfg);
    CHECK(out.admitted >= 2);
    CHECK(out.qos_satisfied);
}

TEST_CASE("all baselines flag structural infeasibility") {
    NetworkInstance inst = realistic(3, 6, 21);
    inst.gain_cue[1] = inst.noise_w * inst.cue_sinr_min[1] / inst.cue_p_max[1] * 0.5;
    REQUIRE(structurally_infeasible(inst));
    DseraConfig cfg;
    cfg.max_outer_passes = 200;
    CHECK(run_scheme1(inst, cfg).structurally_infeasible);
    CHECK(run_scheme2(inst, cfg).structurally_infeasible);
    CHECK(run_3step(inst, cfg).structurally_infeasible);
    CHECK(run_densecell(inst, cfg).structurally_infeasible);
}
