#include "d2d/netgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "d2d/rng.hpp"
#include "d2d/units.hpp"

namespace d2d {

void GenParams::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("GenParams: " + what); };
    if (n_cues <= 0) fail("n_cues must be positive");
    if (m_d2d < 0) fail("m_d2d must be non-negative");
    if (!(cell_radius_m > 0.0)) fail("cell_radius_m must be positive");
    if (!(bs_exclusion_m >= 0.0) || bs_exclusion_m >= cell_radius_m)
        fail("bs_exclusion_m must be in [0, cell_radius_m)");
    if (!(shadow_std_db >= 0.0)) fail("shadow_std_db must be non-negative");
    if (!(pl_exp_coeff_db > 0.0)) fail("pl_exp_coeff_db must be positive");
    if (!(dbm_to_watts(noise_dbm) > 0.0)) fail("noise power must be positive");
    if (!(dbm_to_watts(p_c_max_dbm) > 0.0)) fail("p_c_max must be positive");
    if (!(dbm_to_watts(p_d_max_dbm) > 0.0)) fail("p_d_max must be positive");
    if (cue_qos_db.lo > cue_qos_db.hi) fail("cue_qos_db interval reversed");
    if (d2d_qos_db.lo > d2d_qos_db.hi) fail("d2d_qos_db interval reversed");
    if (cluster_radius_m.lo > cluster_radius_m.hi) fail("cluster_radius_m interval reversed");
    if (!(cluster_radius_m.lo > 0.0)) fail("cluster radius must be positive");
    if (cluster_radius_m.hi >= cell_radius_m) fail("cluster radius must be below cell radius");
}

double path_gain(const GenParams& params, double dist_m, double shadow_db) {
    const double pl_db = params.pl_const_db + params.pl_exp_coeff_db * std::log10(dist_m) + shadow_db;
    return db_to_linear(-pl_db);
}

namespace {

constexpr double kMinLinkDist = 1.0;

// Uniform point in the annulus r in [r_min, r_max] around `center`.
Vec2 draw_in_disk(Rng& rng, Vec2 center, double r_min, double r_max) {
    const double u = rng.uniform();
    const double r = std::sqrt(r_min * r_min + u * (r_max * r_max - r_min * r_min));
    const double phi = rng.uniform(0.0, 6.283185307179586477);
    return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

double clamped_dist(Vec2 a, Vec2 b) { return std::max(dist(a, b), kMinLinkDist); }

}  // namespace

// Draw order (fixed contract, do not reorder):
//   1. CUE positions (annulus around the BS), i = 0..N-1
//   2. D2D Tx positions, j = 0..M-1
//   3. cluster radii, j = 0..M-1
//   4. D2D Rx positions, j = 0..M-1 (rejection-sampled into the cell disk)
//   5. shadowing for: h^c (i asc), h^d (j asc), h^{d,b} (j asc),
//      h^{c,d} (row-major), h^{d,d} (row-major, diagonal skipped)
//   6. QoS floors: CUE (i asc) then D2D (j asc), uniform in dB
NetworkInstance generate(const GenParams& params) {
    params.validate();
    Rng rng(params.rng_seed);

    const int n = params.n_cues;
    const int m = params.m_d2d;

    NetworkInstance inst;
    inst.params = params;
    const Vec2 bs{0.0, 0.0};

    inst.cue_pos.resize(n);
    for (int i = 0; i < n; ++i)
        inst.cue_pos[i] = draw_in_disk(rng, bs, params.bs_exclusion_m, params.cell_radius_m);

    inst.d2d_tx_pos.resize(m);
    for (int j = 0; j < m; ++j)
        inst.d2d_tx_pos[j] = draw_in_disk(rng, bs, params.bs_exclusion_m, params.cell_radius_m);

    std::vector<double> cluster_r(m);
    for (int j = 0; j < m; ++j)
        cluster_r[j] = rng.uniform(params.cluster_radius_m.lo, params.cluster_radius_m.hi);

    inst.d2d_rx_pos.resize(m);
    for (int j = 0; j < m; ++j) {
        Vec2 rx;
        do {
            rx = draw_in_disk(rng, inst.d2d_tx_pos[j], 0.0, cluster_r[j]);
        } while (dist(rx, bs) > params.cell_radius_m || dist(rx, bs) < params.bs_exclusion_m);
        inst.d2d_rx_pos[j] = rx;
    }

    inst.dist_cue_bs.resize(n);
    inst.dist_d2d.resize(m);
    inst.dist_d2d_bs.resize(m);
    inst.dist_cue_d2d = Mat(n, m);
    inst.dist_d2d_d2d = Mat(m, m);
    for (int i = 0; i < n; ++i) inst.dist_cue_bs[i] = clamped_dist(inst.cue_pos[i], bs);
    for (int j = 0; j < m; ++j) {
        inst.dist_d2d[j] = clamped_dist(inst.d2d_tx_pos[j], inst.d2d_rx_pos[j]);
        inst.dist_d2d_bs[j] = clamped_dist(inst.d2d_tx_pos[j], bs);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            inst.dist_cue_d2d(i, j) = clamped_dist(inst.cue_pos[i], inst.d2d_rx_pos[j]);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            inst.dist_d2d_d2d(j, k) = clamped_dist(inst.d2d_tx_pos[j], inst.d2d_rx_pos[k]);

    auto shadow = [&]() { return rng.normal(0.0, params.shadow_std_db); };

    inst.gain_cue.resize(n);
    for (int i = 0; i < n; ++i) inst.gain_cue[i] = path_gain(params, inst.dist_cue_bs[i], shadow());
    inst.gain_d2d.resize(m);
    for (int j = 0; j < m; ++j) inst.gain_d2d[j] = path_gain(params, inst.dist_d2d[j], shadow());
    inst.gain_d2d_bs.resize(m);
    for (int j = 0; j < m; ++j)
        inst.gain_d2d_bs[j] = path_gain(params, inst.dist_d2d_bs[j], shadow());
    inst.gain_cue_d2d = Mat(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            inst.gain_cue_d2d(i, j) = path_gain(params, inst.dist_cue_d2d(i, j), shadow());
    inst.gain_d2d_d2d = Mat(m, m);  // diagonal stays 0: a pair does not interfere with itself
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (j != k)
                inst.gain_d2d_d2d(j, k) = path_gain(params, inst.dist_d2d_d2d(j, k), shadow());

    inst.noise_w = dbm_to_watts(params.noise_dbm);
    inst.cue_p_max.assign(n, dbm_to_watts(params.p_c_max_dbm));
    inst.d2d_p_max.assign(m, dbm_to_watts(params.p_d_max_dbm));

    inst.cue_sinr_min.resize(n);
    inst.cue_rate_min.resize(n);
    for (int i = 0; i < n; ++i) {
        inst.cue_sinr_min[i] = db_to_linear(rng.uniform(params.cue_qos_db.lo, params.cue_qos_db.hi));
        inst.cue_rate_min[i] = rate_from_sinr(inst.cue_sinr_min[i]);
    }
    inst.d2d_sinr_min.resize(m);
    inst.d2d_rate_min.resize(m);
    for (int j = 0; j < m; ++j) {
        inst.d2d_sinr_min[j] = db_to_linear(rng.uniform(params.d2d_qos_db.lo, params.d2d_qos_db.hi));
        inst.d2d_rate_min[j] = rate_from_sinr(inst.d2d_sinr_min[j]);
    }

    return inst;
}

}  // namespace d2d
