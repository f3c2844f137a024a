#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "d2d/model.hpp"
#include "d2d/units.hpp"

using namespace d2d;

namespace {

// Hand-built two-channel instance with easy numbers: gains and noise chosen
// so SINRs are exact fractions.
NetworkInstance tiny_instance() {
    NetworkInstance inst;
    inst.params.n_cues = 2;
    inst.params.m_d2d = 3;
    inst.noise_w = 1.0;

    inst.gain_cue = {2.0, 3.0};
    inst.gain_d2d = {4.0, 5.0, 6.0};
    inst.gain_d2d_bs = {0.5, 0.25, 0.125};
    inst.gain_cue_d2d = Mat(2, 3);
    inst.gain_d2d_d2d = Mat(3, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) inst.gain_cue_d2d(i, j) = 0.1 * (i + 1);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (j != k) inst.gain_d2d_d2d(j, k) = 0.01 * (j + 1);

    inst.dist_cue_bs = {100.0, 150.0};
    inst.dist_d2d = {10.0, 20.0, 30.0};
    inst.dist_d2d_bs = {200.0, 250.0, 300.0};
    inst.dist_cue_d2d = Mat(2, 3, 50.0);
    inst.dist_d2d_d2d = Mat(3, 3, 75.0);

    inst.cue_p_max = {10.0, 10.0};
    inst.d2d_p_max = {2.0, 2.0, 2.0};
    inst.cue_sinr_min = {1.0, 1.0};
    inst.d2d_sinr_min = {1.0, 1.0, 1.0};
    inst.cue_rate_min = {1.0, 1.0};
    inst.d2d_rate_min = {1.0, 1.0, 1.0};
    return inst;
}

}  // namespace

TEST_CASE("cue sinr: clean channel is signal over noise") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    // channel 0 empty of sharers: sinr = 3*2/1
    CHECK(sinr_cue(inst, a, 0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(sinr_cue(inst, a, 1) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("cue sinr: sharers add linearly in the denominator") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 1.0};
    // interference at BS on ch0: 1*0.5 + 2*0.25 = 1.0
    CHECK(sinr_cue(inst, a, 0) == doctest::Approx(6.0 / 2.0).epsilon(1e-15));
    // ch1: 1*0.125
    CHECK(sinr_cue(inst, a, 1) == doctest::Approx(3.0 / 1.125).epsilon(1e-15));
}

TEST_CASE("d2d sinr composes cue and co-sharer interference") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 1.0};
    // pair 0 on ch0: signal 1*4; interference = 3*0.1 (cue) + 2*0.02 (pair 1)
    CHECK(sinr_d2d(inst, a, 0) == doctest::Approx(4.0 / (1.0 + 0.3 + 0.04)).epsilon(1e-15));
    // pair 2 on ch1 alone: 1*6 / (1 + 1*0.2)
    CHECK(sinr_d2d(inst, a, 2) == doctest::Approx(6.0 / 1.2).epsilon(1e-15));
}

TEST_CASE("parked pair has no sinr, reported as an error not as zero") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {1.0, 1.0};
    CHECK_THROWS_AS(sinr_d2d(inst, a, 0), std::logic_error);
    CHECK(d2d_rates(inst, a)[0] == 0.0);  // rate accounting treats parked as zero
}

TEST_CASE("sum rate equals the sum of individual rates") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 1.0};
    double manual = 0.0;
    for (double r : cue_rates(inst, a)) manual += r;
    for (double r : d2d_rates(inst, a)) manual += r;
    CHECK(sum_rate(inst, a) == doctest::Approx(manual).epsilon(1e-14));
    // spot value: all rates are log2(1+sinr)
    const double expect = std::log2(1.0 + 3.0) + std::log2(1.0 + 3.0 / 1.125) +
                          std::log2(1.0 + 4.0 / 1.34) + std::log2(1.0 + 2.0 * 5.0 / (1.0 + 0.3 + 0.01)) +
                          std::log2(1.0 + 6.0 / 1.2);
    CHECK(sum_rate(inst, a) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("interference is linear in the interferer's power") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 1.0};

    // doubling pair 1's power doubles its interference term at the BS
    const double i0 = 3.0 * 2.0 / sinr_cue(inst, a, 0) - 1.0;  // implied interference
    a.d2d_power[1] *= 2.0;
    const double i1 = 3.0 * 2.0 / sinr_cue(inst, a, 0) - 1.0;
    CHECK(i1 - i0 == doctest::Approx(2.0 * 0.25).epsilon(1e-9));
}

TEST_CASE("sinr monotonicity: own power up, sinr up; interferer power up, sinr down") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 1.0};

    const double base = sinr_d2d(inst, a, 0);
    a.d2d_power[0] = 1.5;
    CHECK(sinr_d2d(inst, a, 0) > base);
    a.d2d_power[0] = 1.0;
    a.cue_power[0] = 5.0;
    CHECK(sinr_d2d(inst, a, 0) < base);
}

TEST_CASE("sharing sets partition the pairs and stay sorted") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.channel_of = {1, 0, 1};
    a.d2d_power = {0.1, 0.1, 0.1};
    SharingIndexSets sets = rebuild_sharing_sets(a);

    REQUIRE(sets.members.size() == 3);  // 2 channels + parked
    CHECK(sets.on_channel(0) == std::vector<int>{1});
    CHECK(sets.on_channel(1) == std::vector<int>{0, 2});
    CHECK(sets.parked().empty());

    int total = 0;
    for (const auto& v : sets.members) total += static_cast<int>(v.size());
    CHECK(total == inst.m_d2d());

    // moves preserve ordering and the partition
    sets.move(0, 1, 2);
    CHECK(sets.on_channel(1) == std::vector<int>{2});
    CHECK(sets.parked() == std::vector<int>{0});
    sets.move(1, 0, 1);
    CHECK(sets.on_channel(1) == std::vector<int>{1, 2});
}

TEST_CASE("qos check covers cues and admitted pairs only") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};  // sinrs 6 and 3, floors 1 -> fine
    CHECK(qos_satisfied(inst, a));
    a.channel_of[0] = 0;
    a.d2d_power[0] = 0.1;  // sinr = 0.4/1.3 < 1
    CHECK_FALSE(qos_satisfied(inst, a));
    a.d2d_power[0] = 1.0;  // 4/1.3 > 1, cue0: 6/1.5 > 1
    CHECK(qos_satisfied(inst, a));
}

TEST_CASE("allocation validation enforces caps and parked-power-zero") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    CHECK_NOTHROW(validate_allocation(inst, a));
    a.d2d_power[1] = 0.5;  // parked but transmitting
    CHECK_THROWS_AS(validate_allocation(inst, a), std::logic_error);
    a.d2d_power[1] = 0.0;
    a.cue_power[0] = 11.0;  // above cap
    CHECK_THROWS_AS(validate_allocation(inst, a), std::logic_error);
    a.cue_power[0] = 3.0;
    a.channel_of[2] = 7;  // out of range
    CHECK_THROWS_AS(validate_allocation(inst, a), std::logic_error);
}

TEST_CASE("relabeling pairs permutes rates but not the sum") {
    const NetworkInstance inst = tiny_instance();
    Allocation a = zero_allocation(inst);
    a.cue_power = {3.0, 1.0};
    a.channel_of = {0, 0, 1};
    a.d2d_power = {1.0, 2.0, 0.5};
    const double base = sum_rate(inst, a);

    // permute pair indices (reverse) consistently across every pair-indexed table
    const std::vector<int> perm = {2, 1, 0};
    NetworkInstance pinst = inst;
    Allocation pa = a;
    for (int j = 0; j < 3; ++j) {
        pinst.gain_d2d[j] = inst.gain_d2d[perm[j]];
        pinst.gain_d2d_bs[j] = inst.gain_d2d_bs[perm[j]];
        pinst.d2d_p_max[j] = inst.d2d_p_max[perm[j]];
        pinst.d2d_sinr_min[j] = inst.d2d_sinr_min[perm[j]];
        pinst.d2d_rate_min[j] = inst.d2d_rate_min[perm[j]];
        pa.channel_of[j] = a.channel_of[perm[j]];
        pa.d2d_power[j] = a.d2d_power[perm[j]];
        for (int i = 0; i < 2; ++i) pinst.gain_cue_d2d(i, j) = inst.gain_cue_d2d(i, perm[j]);
    }
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            pinst.gain_d2d_d2d(j, k) = inst.gain_d2d_d2d(perm[j], perm[k]);

    CHECK(sum_rate(pinst, pa) == doctest::Approx(base).epsilon(1e-12));
}
