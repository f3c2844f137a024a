#include "d2d/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "d2d/matching.hpp"
#include "d2d/units.hpp"

namespace d2d {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RunOutcome finish(const NetworkInstance& inst, Allocation alloc, Clock::time_point t0) {
    RunOutcome out;
    out.structurally_infeasible = structurally_infeasible(inst);
    out.alloc = std::move(alloc);
    out.qos_satisfied = qos_satisfied(inst, out.alloc);
    out.admitted = out.alloc.admitted_count();
    out.cue_rates = cue_rates(inst, out.alloc);
    out.d2d_rates = d2d_rates(inst, out.alloc);
    out.sum_rate = sum_rate(inst, out.alloc);
    out.wall_ms = elapsed_ms(t0);
    return out;
}

// ---------------------------------------------------------------------------
// Schemes 1 and 2: cost-only pricing with CUEs pinned at full power.
//
// The schemes' utilities are pure costs (-power * price terms), so a pair has
// no reward to weigh channels with: it takes the channel with the lowest cost
// rate q (ties to the lowest index), transmits the same closed-form power the
// main engine would, and un-admits exactly when that power collapses to zero
// (the rising price has crossed gain/ln2, where even the first watt does not
// pay). Under scheme 1 the cost rate carries no crowding signal — one price
// per channel, moved by the cell user's QoS alone — so pairs herd onto
// whichever channels are cheap. Scheme 2's per-link prices add the co-sharer
// terms, so a crowded channel is expensive to join and pairs spread out;
// that, not the price magnitudes, is what separates the two schemes' sum
// rates.
// ---------------------------------------------------------------------------

struct SchemeCtx {
    const NetworkInstance& inst;
    const DseraConfig& cfg;
    bool per_link;  // scheme 2
    // scheme 1: one price per channel
    std::vector<double> channel_price;
    // scheme 2: per-link prices
    std::vector<double> pair_bs_price;
    Mat pair_pair_price;  // (j, k): j pays at k's receiver
};

// Cost rate for pair j transmitting on channel i given the scheme's prices.
double scheme_cost_rate(const SchemeCtx& sc, const SharingIndexSets& sets, int j, int i) {
    const NetworkInstance& inst = sc.inst;
    if (!sc.per_link) {
        return sc.channel_price[i] * inst.gain_d2d_bs[j] / inst.gain_cue[i];
    }
    double q = sc.pair_bs_price[j] * inst.gain_d2d_bs[j] / inst.gain_cue[i];
    for (int k : sets.on_channel(i)) {
        if (k == j) continue;
        q += sc.pair_pair_price(j, k) * inst.gain_d2d_d2d(j, k) / inst.gain_d2d[k];
    }
    return q;
}

double scheme_effective_gain(const NetworkInstance& inst, const Allocation& alloc,
                             const SharingIndexSets& sets, int j, int i) {
    double interf = alloc.cue_power[i] * inst.gain_cue_d2d(i, j);
    for (int k : sets.on_channel(i)) {
        if (k == j) continue;
        interf += alloc.d2d_power[k] * inst.gain_d2d_d2d(k, j);
    }
    return inst.gain_d2d[j] / (inst.noise_w + interf);
}

RunOutcome run_cost_scheme(const NetworkInstance& inst, const DseraConfig& cfg, bool per_link) {
    cfg.pricing.validate();
    const auto t0 = Clock::now();
    const int n = inst.n_cues();
    const int m = inst.m_d2d();
    const PricingParams& pp = cfg.pricing;

    SchemeCtx sc{inst, cfg, per_link, {}, {}, {}};
    if (per_link) {
        sc.pair_bs_price.assign(m, pp.theta_init);
        sc.pair_pair_price = Mat(m, m, pp.theta_init);
        for (int j = 0; j < m; ++j) sc.pair_pair_price(j, j) = 0.0;
    } else {
        sc.channel_price.assign(n, pp.theta_init);
    }

    Allocation alloc = zero_allocation(inst);
    for (int i = 0; i < n; ++i) alloc.cue_power[i] = inst.cue_p_max[i];
    SharingIndexSets sets = rebuild_sharing_sets(alloc);

    RunOutcome out;
    out.structurally_infeasible = structurally_infeasible(inst);

    const double eps_abs = [&] {
        double s = 0.0;
        for (double p : inst.d2d_p_max) s += p * p;
        return cfg.epsilon_rel * std::sqrt(s);
    }();

    int no_change_streak = 0;
    bool satisfied = false;
    while (!satisfied && out.outer_passes < cfg.max_outer_passes) {
        ++out.outer_passes;

        // Inner loop: pair strategies only (CUEs stay at full power).
        int switches_total = 0;
        double last_delta = 0.0;
        int sweeps = 0;
        double best_delta = std::numeric_limits<double>::infinity();
        int since_best = 0;
        while (sweeps < cfg.max_inner_sweeps) {
            double delta2 = 0.0;
            int switches = 0;
            for (int j = 0; j < m; ++j) {
                int best_ch = n;
                double best_p = 0.0;
                double best_q = std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i) {
                    const double q = scheme_cost_rate(sc, sets, j, i);
                    if (q < best_q) {  // strict: ties keep the lowest index
                        best_q = q;
                        best_ch = i;
                    }
                }
                if (best_ch < n) {
                    const double gamma =
                        scheme_effective_gain(inst, alloc, sets, j, best_ch);
                    best_p = closed_form_power(best_q, gamma, inst.d2d_p_max[j]);
                    if (best_p <= 0.0) {
                        best_ch = n;  // priced out: un-admission
                        best_p = 0.0;
                    }
                }
                const double d = best_p - alloc.d2d_power[j];
                delta2 += d * d;
                if (best_ch != alloc.channel_of[j]) {
                    sets.move(j, alloc.channel_of[j], best_ch);
                    alloc.channel_of[j] = best_ch;
                    ++switches;
                }
                alloc.d2d_power[j] = best_p;
            }
            last_delta = std::sqrt(delta2);
            switches_total += switches;
            ++sweeps;
            if (last_delta <= eps_abs && switches == 0) break;
            if (cfg.inner_plateau_window > 0) {
                if (last_delta < best_delta) {
                    best_delta = last_delta;
                    since_best = 0;
                } else if (++since_best >= cfg.inner_plateau_window) {
                    break;  // orbiting, not contracting
                }
            }
        }
        out.inner_sweeps += sweeps;

        // QoS check on the settled strategies; exiting here (before any price
        // reaction) keeps the returned prices the ones the pairs responded to.
        satisfied = true;
        for (int i = 0; i < n && satisfied; ++i)
            if (sinr_cue(inst, alloc, i) < inst.cue_sinr_min[i]) satisfied = false;
        for (int j = 0; j < m && satisfied; ++j)
            if (alloc.admitted(j) && sinr_d2d(inst, alloc, j) < inst.d2d_sinr_min[j])
                satisfied = false;
        if (satisfied) break;

        // Whole-updating price reaction.
        int touched = 0;
        for (int i = 0; i < n; ++i) {
            const double rate = rate_from_sinr(sinr_cue(inst, alloc, i));
            double f = 1.0;
            if (rate < inst.cue_rate_min[i])
                f = 1.0 + pp.lambda_up;
            else if (rate > inst.cue_rate_min[i] * (1.0 + pp.slack))
                f = 1.0 - pp.lambda_down;
            if (f == 1.0) continue;
            if (!per_link) {
                sc.channel_price[i] *= f;
                ++touched;
            } else {
                for (int j : sets.on_channel(i)) {
                    sc.pair_bs_price[j] *= f;
                    ++touched;
                }
            }
        }
        if (per_link) {
            for (int j = 0; j < m; ++j) {
                if (!alloc.admitted(j)) continue;
                const int i = alloc.channel_of[j];
                const double rate = rate_from_sinr(sinr_d2d(inst, alloc, j));
                double f = 1.0;
                if (rate < inst.d2d_rate_min[j])
                    f = 1.0 + pp.lambda_up;
                else if (rate > inst.d2d_rate_min[j] * (1.0 + pp.slack))
                    f = 1.0 - pp.lambda_down;
                if (f == 1.0) continue;
                for (int k : sets.on_channel(i)) {
                    if (k == j) continue;
                    sc.pair_pair_price(k, j) *= f;
                    ++touched;
                }
            }
        }

        const bool changed = touched > 0 || switches_total > 0 || last_delta > eps_abs;
        no_change_streak = changed ? 0 : no_change_streak + 1;
        if (cfg.detect_stall && no_change_streak >= 2) {
            RunOutcome o = finish(inst, alloc, t0);
            o.outer_passes = out.outer_passes;
            o.inner_sweeps = out.inner_sweeps;
            o.stalled = true;
            o.structurally_infeasible = out.structurally_infeasible;
            return o;
        }
    }

    RunOutcome o = finish(inst, alloc, t0);
    o.outer_passes = out.outer_passes;
    o.inner_sweeps = out.inner_sweeps;
    o.pass_budget_exhausted = !satisfied && out.outer_passes >= cfg.max_outer_passes;
    o.structurally_infeasible = out.structurally_infeasible;
    return o;
}

// ---------------------------------------------------------------------------
// 3Step: per-(CUE, pair) joint power optimum, then max-weight matching.
// ---------------------------------------------------------------------------

struct PairPowerOpt {
    bool feasible = false;
    double rate = 0.0;  // best joint rate R^c + R^d
    double p_c = 0.0;
    double p_d = 0.0;
};

// Best joint rate of CUE i and pair j alone on channel i subject to both
// QoS floors. For a fixed CUE power the pair's feasible interval is an
// explicit box and the rate has a single interior stationary point, so a scan
// over CUE power with exact inner maximization suffices.
PairPowerOpt best_pair_power(const NetworkInstance& inst, int i, int j, int pc_grid) {
    PairPowerOpt best;
    const double sigma = inst.noise_w;
    const double hc = inst.gain_cue[i];
    const double hd = inst.gain_d2d[j];
    const double hdb = inst.gain_d2d_bs[j];
    const double hcd = inst.gain_cue_d2d(i, j);
    const double gc_min = inst.cue_sinr_min[i];
    const double gd_min = inst.d2d_sinr_min[j];
    const double pc_max = inst.cue_p_max[i];
    const double pd_max = inst.d2d_p_max[j];

    // CUE power must at least cover its floor against noise alone.
    const double pc_lo = gc_min * sigma / hc;
    if (pc_lo > pc_max) return best;  // CUE infeasible even alone

    auto eval = [&](double pc, double pd) {
        return rate_from_sinr(pc * hc / (sigma + pd * hdb)) +
               rate_from_sinr(pd * hd / (sigma + pc * hcd));
    };

    auto consider_pc = [&](double pc) {
        // pair QoS: pd*hd/(sigma + pc*hcd) >= gd_min  ->  pd >= lo
        // CUE QoS:  pc*hc/(sigma + pd*hdb) >= gc_min  ->  pd <= hi
        const double lo = gd_min * (sigma + pc * hcd) / hd;
        const double hi = std::min(pd_max, (pc * hc / gc_min - sigma) / hdb);
        if (lo > hi) return;
        // Stationary point of the joint rate in pd: with A = pc*hc, B = sigma,
        // C = hdb, D = hd/(sigma + pc*hcd), d/dpd = 0 reduces to
        // (B + C*pd)^2 = A*(C - D*B)/D.
        const double A = pc * hc;
        const double B = sigma;
        const double C = hdb;
        const double D = hd / (sigma + pc * hcd);
        double cand[3] = {lo, hi, lo};
        int nc = 2;
        const double disc = A * (C - D * B) / D;
        if (disc > 0.0) {
            const double pd_star = (std::sqrt(disc) - B) / C;
            if (pd_star > lo && pd_star < hi) cand[nc++] = pd_star;
        }
        for (int c = 0; c < nc; ++c) {
            const double r = eval(pc, cand[c]);
            if (!best.feasible || r > best.rate) {
                best.feasible = true;
                best.rate = r;
                best.p_c = pc;
                best.p_d = cand[c];
            }
        }
    };

    // Coarse scan of the feasible CUE range, then a refinement pass around the
    // incumbent.
    for (int g = 0; g <= pc_grid; ++g)
        consider_pc(pc_lo + (pc_max - pc_lo) * g / pc_grid);
    if (best.feasible) {
        const double span = (pc_max - pc_lo) / pc_grid;
        const double center = best.p_c;
        const int fine = 64;
        for (int g = -fine; g <= fine; ++g) {
            const double pc = center + span * g / fine;
            if (pc >= pc_lo && pc <= pc_max) consider_pc(pc);
        }
    }
    return best;
}

RunOutcome run_three_step(const NetworkInstance& inst, const DseraConfig& cfg) {
    (void)cfg;
    const auto t0 = Clock::now();
    const int n = inst.n_cues();
    const int m = inst.m_d2d();
    constexpr int kPcGrid = 256;

    Allocation alloc = zero_allocation(inst);
    for (int i = 0; i < n; ++i) alloc.cue_power[i] = inst.cue_p_max[i];

    // Interference-free CUE rate; the matching weight is the *uplift* a pair
    // brings over leaving the channel to its CUE alone.
    std::vector<double> solo_rate(n);
    std::vector<bool> solo_feasible(n);
    for (int i = 0; i < n; ++i) {
        solo_rate[i] = rate_from_sinr(inst.cue_p_max[i] * inst.gain_cue[i] / inst.noise_w);
        solo_feasible[i] =
            inst.cue_p_max[i] * inst.gain_cue[i] / inst.noise_w >= inst.cue_sinr_min[i];
    }

    Mat uplift(n, m, 0.0);
    std::vector<std::vector<PairPowerOpt>> opt(n, std::vector<PairPowerOpt>(m));
    for (int i = 0; i < n; ++i) {
        if (!solo_feasible[i]) continue;  // pairing cannot repair a dead CUE
        for (int j = 0; j < m; ++j) {
            opt[i][j] = best_pair_power(inst, i, j, kPcGrid);
            if (opt[i][j].feasible)
                uplift(i, j) = std::max(0.0, opt[i][j].rate - solo_rate[i]);
        }
    }

    const std::vector<int> match = max_weight_matching(uplift);
    for (int i = 0; i < n; ++i) {
        const int j = match[i];
        if (j < 0 || uplift(i, j) <= 0.0) continue;  // zero uplift: keep the CUE alone
        alloc.channel_of[j] = i;
        alloc.cue_power[i] = opt[i][j].p_c;
        alloc.d2d_power[j] = opt[i][j].p_d;
    }

    return finish(inst, alloc, t0);
}

// ---------------------------------------------------------------------------
// DenseCell-style greedy multi-sharing admission.
// ---------------------------------------------------------------------------

struct GroupPlan {
    bool feasible = false;
    double group_rate = 0.0;
    double cue_power = 0.0;
    std::vector<double> pair_power;  // aligned with the member list
};

// Min-power QoS solve for {CUE i} + members on channel i (fixed-point of the
// per-user floor equations, capped), then one pass letting each user raise
// power up to the smallest victim margin. Mirrors a dense-cell heuristic:
// feasibility first, then spend the slack.
GroupPlan plan_group(const NetworkInstance& inst, int i, const std::vector<int>& members) {
    const int g = static_cast<int>(members.size());
    GroupPlan plan;
    plan.pair_power.assign(g, 0.0);

    // Floors are targeted with a hair of slack so the plan survives an exact
    // >= re-evaluation; the margin must dominate the solver's convergence
    // threshold below.
    constexpr double kMargin = 1e-8;

    const double sigma = inst.noise_w;
    std::vector<double> p(g + 1, 0.0);  // [0] = CUE

    auto sinr_of = [&](int u) {
        double interf = sigma;
        if (u == 0) {
            for (int d = 0; d < g; ++d) interf += p[d + 1] * inst.gain_d2d_bs[members[d]];
            return p[0] * inst.gain_cue[i] / interf;
        }
        const int j = members[u - 1];
        interf += p[0] * inst.gain_cue_d2d(i, j);
        for (int d = 0; d < g; ++d)
            if (d != u - 1) interf += p[d + 1] * inst.gain_d2d_d2d(members[d], j);
        return p[u] * inst.gain_d2d[j] / interf;
    };
    auto floor_of = [&](int u) {
        return u == 0 ? inst.cue_sinr_min[i] : inst.d2d_sinr_min[members[u - 1]];
    };
    auto cap_of = [&](int u) { return u == 0 ? inst.cue_p_max[i] : inst.d2d_p_max[members[u - 1]]; };
    auto gain_of = [&](int u) { return u == 0 ? inst.gain_cue[i] : inst.gain_d2d[members[u - 1]]; };

    // Foschini-Miljanic style iteration: each user moves to the power that
    // exactly meets its floor against current interference, capped.
    for (int it = 0; it < 64; ++it) {
        double max_rel_change = 0.0;
        for (int u = 0; u <= g; ++u) {
            const double sinr = sinr_of(u);
            double target;
            if (p[u] == 0.0) {
                // bootstrap from the interference level directly
                double interf = sigma;
                if (u == 0) {
                    for (int d = 0; d < g; ++d) interf += p[d + 1] * inst.gain_d2d_bs[members[d]];
                } else {
                    const int j = members[u - 1];
                    interf += p[0] * inst.gain_cue_d2d(i, j);
                    for (int d = 0; d < g; ++d)
                        if (d != u - 1) interf += p[d + 1] * inst.gain_d2d_d2d(members[d], j);
                }
                target = floor_of(u) * (1.0 + kMargin) * interf / gain_of(u);
            } else {
                target = p[u] * floor_of(u) * (1.0 + kMargin) / sinr;
            }
            target = std::min(target, cap_of(u));
            max_rel_change = std::max(max_rel_change, std::abs(target - p[u]) / cap_of(u));
            p[u] = target;
        }
        if (max_rel_change < 1e-10) break;
    }
    for (int u = 0; u <= g; ++u)
        if (sinr_of(u) < floor_of(u)) return plan;  // infeasible group

    // Uniform scale-up: multiplying every power by one factor dilutes the
    // noise term in each SINR, so every floor keeps holding while all rates
    // climb. The min-power solve leaves everyone exactly at their floor with
    // no individual headroom; scaling until the first cap restores slack for
    // the per-user pass below.
    double scale = std::numeric_limits<double>::infinity();
    for (int u = 0; u <= g; ++u)
        if (p[u] > 0.0) scale = std::min(scale, cap_of(u) / p[u]);
    if (std::isfinite(scale) && scale > 1.0)
        for (int u = 0; u <= g; ++u) p[u] = std::min(cap_of(u), p[u] * scale);

    // Bounded best-response passes on the group objective: each user scans its
    // feasible power slice — own floor at the bottom, the victims' headroom at
    // the top — and takes the group-rate argmax. A move never breaks a floor
    // (the top end is exactly where the tightest victim would dip to its
    // floor), so feasibility is invariant and a few passes settle the powers.
    auto interference_at = [&](int v) {
        double interf = sigma;
        if (v == 0) {
            for (int d = 0; d < g; ++d) interf += p[d + 1] * inst.gain_d2d_bs[members[d]];
        } else {
            const int j = members[v - 1];
            interf += p[0] * inst.gain_cue_d2d(i, j);
            for (int d = 0; d < g; ++d)
                if (d != v - 1) interf += p[d + 1] * inst.gain_d2d_d2d(members[d], j);
        }
        return interf;
    };
    constexpr int kAscentPasses = 4;
    constexpr int kScanPoints = 24;
    std::vector<double> g_uv(g + 1, 0.0);      // u's gain into each victim
    std::vector<double> base_interf(g + 1);    // victim interference minus u's share
    for (int pass = 0; pass < kAscentPasses; ++pass) {
        bool moved = false;
        for (int u = 0; u <= g; ++u) {
            double hi = cap_of(u);
            for (int v = 0; v <= g; ++v) {
                if (v == u) {
                    g_uv[v] = 0.0;
                    base_interf[v] = interference_at(u);
                    continue;
                }
                g_uv[v] = v == 0 ? inst.gain_d2d_bs[members[u - 1]]
                          : u == 0
                              ? inst.gain_cue_d2d(i, members[v - 1])
                              : inst.gain_d2d_d2d(members[u - 1], members[v - 1]);
                base_interf[v] = interference_at(v) - p[u] * g_uv[v];
                if (g_uv[v] <= 0.0) continue;
                const double headroom =
                    p[v] * gain_of(v) / (floor_of(v) * (1.0 + kMargin)) - base_interf[v];
                hi = std::min(hi, headroom / g_uv[v]);
            }
            const double lo = floor_of(u) * (1.0 + kMargin) * base_interf[u] / gain_of(u);
            if (!(hi > 0.0) || hi < lo) continue;  // no slack along this slice
            // Group rate as a function of p[u] alone: u's own log term plus
            // each victim's term with u's share of the interference varying.
            auto slice_rate = [&](double pu) {
                double r = rate_from_sinr(pu * gain_of(u) / base_interf[u]);
                for (int v = 0; v <= g; ++v) {
                    if (v == u) continue;
                    r += rate_from_sinr(p[v] * gain_of(v) /
                                        (base_interf[v] + pu * g_uv[v]));
                }
                return r;
            };
            const double saved = p[u];
            double best_p = saved;
            double best_r = slice_rate(saved);
            const double lo_eff = std::max(lo, hi * 1e-9);
            const double ratio = hi / lo_eff;
            for (int s = 0; s <= kScanPoints; ++s) {
                const double cand =
                    s == kScanPoints
                        ? hi
                        : lo_eff * std::pow(ratio, static_cast<double>(s) / kScanPoints);
                const double r = slice_rate(cand);
                if (r > best_r * (1.0 + 1e-12)) {
                    best_r = r;
                    best_p = cand;
                }
            }
            p[u] = best_p;
            if (best_p != saved) moved = true;
        }
        if (!moved) break;
    }
    for (int u = 0; u <= g; ++u)
        if (sinr_of(u) < floor_of(u)) return plan;  // exact, matches the public recheck

    plan.feasible = true;
    plan.cue_power = p[0];
    for (int d = 0; d < g; ++d) plan.pair_power[d] = p[d + 1];
    plan.group_rate = rate_from_sinr(sinr_of(0));
    for (int u = 1; u <= g; ++u) plan.group_rate += rate_from_sinr(sinr_of(u));
    return plan;
}

RunOutcome run_dense_cell(const NetworkInstance& inst, const DseraConfig& cfg) {
    (void)cfg;
    const auto t0 = Clock::now();
    const int n = inst.n_cues();
    const int m = inst.m_d2d();

    Allocation alloc = zero_allocation(inst);
    std::vector<std::vector<int>> members(n);
    std::vector<double> group_rate(n);
    std::vector<GroupPlan> current(n);
    for (int i = 0; i < n; ++i) {
        current[i] = plan_group(inst, i, {});
        if (!current[i].feasible) {
            // dead CUE: park it at full power; nothing can join this channel
            current[i].cue_power = inst.cue_p_max[i];
            current[i].group_rate =
                rate_from_sinr(inst.cue_p_max[i] * inst.gain_cue[i] / inst.noise_w);
        }
        group_rate[i] = current[i].group_rate;
        alloc.cue_power[i] = current[i].cue_power;
    }

    std::vector<bool> parked(m, true);
    std::vector<bool> cue_alive(n);
    for (int i = 0; i < n; ++i) cue_alive[i] = plan_group(inst, i, {}).feasible;

    // gain[j][i] caches the marginal sum-rate of admitting j onto i; only the
    // changed channel is re-planned after each admission.
    Mat gain(m, n, -1.0);
    std::vector<std::vector<GroupPlan>> cand(m, std::vector<GroupPlan>(n));
    auto refresh = [&](int j, int i) {
        if (!cue_alive[i]) {
            gain(j, i) = -1.0;
            return;
        }
        std::vector<int> trial = members[i];
        trial.insert(std::lower_bound(trial.begin(), trial.end(), j), j);
        cand[j][i] = plan_group(inst, i, trial);
        gain(j, i) = cand[j][i].feasible ? cand[j][i].group_rate - group_rate[i] : -1.0;
    };
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) refresh(j, i);

    int steps = 0;
    while (true) {
        int bj = -1, bi = -1;
        double bg = 1e-12;  // require a strictly positive gain
        for (int j = 0; j < m; ++j) {
            if (!parked[j]) continue;
            for (int i = 0; i < n; ++i) {
                if (gain(j, i) > bg) {
                    bg = gain(j, i);
                    bj = j;
                    bi = i;
                }
            }
        }
        if (bj < 0) break;
        ++steps;

        members[bi].insert(std::lower_bound(members[bi].begin(), members[bi].end(), bj), bj);
        parked[bj] = false;
        const GroupPlan& plan = cand[bj][bi];
        group_rate[bi] = plan.group_rate;
        alloc.cue_power[bi] = plan.cue_power;
        alloc.channel_of[bj] = bi;
        for (size_t d = 0; d < members[bi].size(); ++d)
            alloc.d2d_power[members[bi][d]] = plan.pair_power[d];

        for (int j = 0; j < m; ++j)
            if (parked[j]) refresh(j, bi);
    }

    RunOutcome out = finish(inst, alloc, t0);
    out.outer_passes = steps;
    return out;
}

}  // namespace

RunOutcome run_scheme1(const NetworkInstance& inst, const DseraConfig& cfg) {
    return run_cost_scheme(inst, cfg, false);
}

RunOutcome run_scheme2(const NetworkInstance& inst, const DseraConfig& cfg) {
    return run_cost_scheme(inst, cfg, true);
}

RunOutcome run_3step(const NetworkInstance& inst, const DseraConfig& cfg) {
    return run_three_step(inst, cfg);
}

RunOutcome run_densecell(const NetworkInstance& inst, const DseraConfig& cfg) {
    return run_dense_cell(inst, cfg);
}

}  // namespace d2d
