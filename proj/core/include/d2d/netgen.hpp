#pragma once

#include <cstdint>
#include <vector>

#include "d2d/common.hpp"

namespace d2d {

// Scenario parameters for a single-cell uplink with D2D pairs reusing CUE
// channels. One CUE owns exactly one uplink channel; D2D receivers are
// clustered around their transmitter.
struct GenParams {
    int n_cues = 10;   // N: cellular users == orthogonal channels
    int m_d2d = 200;   // M: D2D pairs

    double cell_radius_m = 400.0;
    double bs_exclusion_m = 1.0;  // minimum node-to-BS placement distance

    // Path loss 15.3 + 37.6 log10(d[m]) dB plus log-normal shadowing, applied
    // to every link (cellular and D2D alike).
    double pl_const_db = 15.3;
    double pl_exp_coeff_db = 37.6;
    double shadow_std_db = 8.0;

    double noise_dbm = -114.0;   // per-channel noise power
    double p_c_max_dbm = 24.0;   // CUE transmit cap
    double p_d_max_dbm = 21.0;   // D2D transmit cap

    // Per-entity SINR floors drawn uniformly in dB.
    Interval cue_qos_db{0.0, 10.0};
    Interval d2d_qos_db{0.0, 10.0};

    // Rx is placed uniformly in a disk of this radius around its Tx.
    Interval cluster_radius_m{10.0, 40.0};

    uint64_t rng_seed = 1;

    void validate() const;  // throws std::invalid_argument on nonsense
};

// A fully materialized random drop: geometry, link gains, QoS floors, caps.
// Index conventions: CUE/channel i in [0, N); D2D pair j in [0, M).
struct NetworkInstance {
    GenParams params;

    std::vector<Vec2> cue_pos;     // N
    std::vector<Vec2> d2d_tx_pos;  // M
    std::vector<Vec2> d2d_rx_pos;  // M

    // Distances in meters, clamped to >= 1 to avoid the path-loss singularity.
    std::vector<double> dist_cue_bs;   // s(c_i): CUE i -> BS
    std::vector<double> dist_d2d;      // s(d_j): Tx j -> Rx j
    std::vector<double> dist_d2d_bs;   // s(d_j, BS): Tx j -> BS
    Mat dist_cue_d2d;                  // N x M: CUE i -> Rx j
    Mat dist_d2d_d2d;                  // M x M: Tx j -> Rx k

    // Linear power gains.
    std::vector<double> gain_cue;      // h^c_i: CUE i -> BS
    std::vector<double> gain_d2d;      // h^d_j: Tx j -> Rx j
    std::vector<double> gain_d2d_bs;   // h^{d,b}_j: Tx j -> BS
    Mat gain_cue_d2d;                  // h^{c,d}_{i,j}: CUE i -> Rx j (N x M)
    Mat gain_d2d_d2d;                  // h^{d,d}_{j,k}: Tx j -> Rx k (M x M, diag 0)

    double noise_w = 0.0;

    std::vector<double> cue_p_max;   // watts, per CUE
    std::vector<double> d2d_p_max;   // watts, per pair

    std::vector<double> cue_sinr_min;  // linear SINR floors
    std::vector<double> d2d_sinr_min;
    std::vector<double> cue_rate_min;  // log2(1 + sinr_min), bit/s/Hz
    std::vector<double> d2d_rate_min;

    int n_cues() const { return static_cast<int>(gain_cue.size()); }
    int m_d2d() const { return static_cast<int>(gain_d2d.size()); }
};

// Deterministic per-seed generation. The draw order is part of the contract;
// see netgen.cpp.
NetworkInstance generate(const GenParams& params);

// Path gain (linear) for a distance and a shadowing sample in dB.
double path_gain(const GenParams& params, double dist_m, double shadow_db);

}  // namespace d2d
