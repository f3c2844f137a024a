#include "d2d/dsera.hpp"

#include <chrono>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "d2d/units.hpp"

namespace d2d {

namespace {

struct Violations {
    int cues = 0;
    int pairs = 0;  // admitted pairs only
    bool any() const { return cues > 0 || pairs > 0; }
};

Violations count_violations(const NetworkInstance& inst, const Allocation& alloc) {
    Violations v;
    for (int i = 0; i < inst.n_cues(); ++i)
        if (sinr_cue(inst, alloc, i) < inst.cue_sinr_min[i]) ++v.cues;
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (alloc.admitted(j) && sinr_d2d(inst, alloc, j) < inst.d2d_sinr_min[j]) ++v.pairs;
    return v;
}

bool channel_all_satisfied(const NetworkInstance& inst, const GameState& st, int i) {
    if (st.sets.on_channel(i).empty()) return false;  // nothing to re-price; never skip
    if (sinr_cue(inst, st.alloc, i) < inst.cue_sinr_min[i]) return false;
    for (int j : st.sets.on_channel(i))
        if (sinr_d2d(inst, st.alloc, j) < inst.d2d_sinr_min[j]) return false;
    return true;
}

double p_max_norm(const NetworkInstance& inst) {
    double s = 0.0;
    for (double p : inst.cue_p_max) s += p * p;
    for (double p : inst.d2d_p_max) s += p * p;
    return std::sqrt(s);
}

RunOutcome run_priced(const NetworkInstance& inst, const DseraConfig& cfg) {
    cfg.pricing.validate();
    const auto t0 = std::chrono::steady_clock::now();

    RunOutcome out;
    out.structurally_infeasible = structurally_infeasible(inst);

    const CostModel cost = build_cost_model(inst, cfg.alpha_cost);
    GameState st = make_initial_state(inst, cfg.pricing.theta_init);

    std::FILE* trace = nullptr;
    if (!cfg.trace_path.empty()) {
        trace = std::fopen(cfg.trace_path.c_str(), "w");
        if (!trace) throw std::runtime_error("cannot open trace file: " + cfg.trace_path);
        std::fprintf(trace, "pass,inner_sweeps,sum_rate,cue_violations,d2d_violations,admitted\n");
    }

    const double eps_abs = cfg.epsilon_rel * p_max_norm(inst);
    const int n = inst.n_cues();
    const bool step_scheme = cfg.price_scheme == PriceScheme::kStepByStep;
    // A no-op cycle of this many passes proves a fixed point: the round-robin
    // pointer returns to the same position with identical state.
    const int stall_cycle = step_scheme ? n + 1 : 2;

    int rr = 0;  // round-robin CUE pointer for step-by-step pricing
    int no_change_streak = 0;
    bool satisfied = !count_violations(inst, st.alloc).any();
    bool at_fixed_point = satisfied;  // only an empty instance satisfies at P(0)=0

    // Closest-to-feasible state seen, restored if the budget runs out: fewest
    // unmet floors first, highest sum rate as the tiebreak. A state with zero
    // violations terminates the loop instead, so a snapshot never outranks a
    // satisfied exit.
    struct Snapshot {
        Allocation alloc;
        PriceVector prices;
        int violations = 0;
        double sum = 0.0;
        bool at_fixed_point = false;
        bool used = false;
    } best;

    while (!satisfied && out.outer_passes < cfg.max_outer_passes) {
        ++out.outer_passes;

        bool skip = false;
        if (step_scheme && cfg.skip_satisfied_channels)
            skip = channel_all_satisfied(inst, st, rr);

        int sweeps = 0;
        int switches_total = 0;
        double last_delta = 0.0;
        int price_touches = 0;
        if (!skip) {
            at_fixed_point = false;
            double best_delta = std::numeric_limits<double>::infinity();
            int since_best = 0;
            while (sweeps < cfg.max_inner_sweeps) {
                int switches = 0;
                last_delta = game_sweep(inst, cost, st, &switches);
                switches_total += switches;
                ++sweeps;
                if (last_delta <= eps_abs && switches == 0) {
                    at_fixed_point = true;
                    break;
                }
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
            // QoS check against the fresh equilibrium *before* adapting
            // prices: exiting here keeps the returned allocation an exact
            // best-response fixed point of the returned prices.
            const Violations v = count_violations(inst, st.alloc);
            satisfied = !v.any();
            if (!satisfied) {
                const int viol = v.cues + v.pairs;
                const double sum = sum_rate(inst, st.alloc);
                if (!best.used || viol < best.violations ||
                    (viol == best.violations && sum > best.sum)) {
                    best.alloc = st.alloc;
                    best.prices = st.prices;
                    best.violations = viol;
                    best.sum = sum;
                    best.at_fixed_point = at_fixed_point;
                    best.used = true;
                }
                if (step_scheme)
                    price_touches = step_update(inst, st, rr, cfg.pricing);
                else
                    price_touches = whole_update(inst, st, cfg.pricing);
            }
        }

        if (trace) {
            const Violations vt = count_violations(inst, st.alloc);
            std::fprintf(trace, "%d,%d,%.6f,%d,%d,%d\n", out.outer_passes, sweeps,
                         sum_rate(inst, st.alloc), vt.cues, vt.pairs, st.alloc.admitted_count());
        }
        if (satisfied) break;

        if (step_scheme) rr = (rr + 1) % n;

        const bool changed = price_touches > 0 || switches_total > 0 || last_delta > eps_abs;
        no_change_streak = (!skip && changed) ? 0 : no_change_streak + 1;
        if (cfg.detect_stall && no_change_streak >= stall_cycle) {
            out.stalled = true;
            break;
        }
    }
    out.pass_budget_exhausted = !satisfied && out.outer_passes >= cfg.max_outer_passes;

    if (trace) std::fclose(trace);

    if (!satisfied && best.used) {
        const Violations vf = count_violations(inst, st.alloc);
        const int viol = vf.cues + vf.pairs;
        if (best.violations < viol ||
            (best.violations == viol && best.sum > sum_rate(inst, st.alloc))) {
            st.alloc = best.alloc;
            st.prices = best.prices;
            at_fixed_point = best.at_fixed_point;
        }
    }

    out.converged = at_fixed_point;
    out.alloc = st.alloc;
    out.prices = st.prices;
    out.qos_satisfied = qos_satisfied(inst, out.alloc);
    out.admitted = out.alloc.admitted_count();
    out.cue_rates = cue_rates(inst, out.alloc);
    out.d2d_rates = d2d_rates(inst, out.alloc);
    out.sum_rate = sum_rate(inst, out.alloc);
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace

RunOutcome run_dsera(const NetworkInstance& inst, const DseraConfig& cfg) {
    return run_priced(inst, cfg);
}

RunOutcome run_scheme3(const NetworkInstance& inst, const DseraConfig& cfg) {
    DseraConfig whole = cfg;
    whole.price_scheme = PriceScheme::kWhole;
    return run_priced(inst, whole);
}

}  // namespace d2d
