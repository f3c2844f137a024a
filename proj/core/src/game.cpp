#include "d2d/game.hpp"

#include <cmath>
#include <stdexcept>

#include "d2d/units.hpp"

namespace d2d {

PriceVector PriceVector::uniform(int n, int m, double theta_init) {
    PriceVector pv;
    pv.cue_to_d2d = Mat(n, m, theta_init);
    pv.d2d_to_bs.assign(m, theta_init);
    pv.d2d_to_d2d = Mat(m, m, theta_init);
    for (int j = 0; j < m; ++j) pv.d2d_to_d2d(j, j) = 0.0;
    return pv;
}

CostModel build_cost_model(const NetworkInstance& inst, double alpha) {
    const int n = inst.n_cues();
    const int m = inst.m_d2d();
    CostModel cm;
    cm.alpha = alpha;
    cm.cue_to_d2d = Mat(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            cm.cue_to_d2d(i, j) = std::pow(inst.dist_cue_d2d(i, j) / inst.dist_d2d[j], -alpha);
    cm.d2d_to_d2d = Mat(m, m);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            if (j != k)
                cm.d2d_to_d2d(j, k) = std::pow(inst.dist_d2d_d2d(j, k) / inst.dist_d2d[k], -alpha);
    cm.d2d_bs_num.resize(m);
    for (int j = 0; j < m; ++j) cm.d2d_bs_num[j] = std::pow(inst.dist_d2d_bs[j], -alpha);
    cm.cue_den.resize(n);
    for (int i = 0; i < n; ++i) cm.cue_den[i] = std::pow(inst.dist_cue_bs[i], alpha);
    return cm;
}

double closed_form_power(double q, double gamma, double p_max) {
    if (q < 0.0) throw std::invalid_argument("closed_form_power: negative cost rate");
    if (!(gamma > 0.0)) throw std::invalid_argument("closed_form_power: gamma must be positive");
    if (!(p_max > 0.0)) throw std::invalid_argument("closed_form_power: p_max must be positive");
    if (q == 0.0) return p_max;  // utility strictly increasing
    const double interior = 1.0 / (kLn2 * q) - 1.0 / gamma;
    if (interior <= 0.0) return 0.0;
    return std::min(interior, p_max);
}

GameState make_initial_state(const NetworkInstance& inst, double theta_init) {
    GameState st;
    st.alloc = zero_allocation(inst);
    st.sets = rebuild_sharing_sets(st.alloc);
    st.prices = PriceVector::uniform(inst.n_cues(), inst.m_d2d(), theta_init);
    return st;
}

UtilityConstants cue_constants(const NetworkInstance& inst, const CostModel& cost,
                               const GameState& st, int i) {
    double interf = 0.0;
    double q = 0.0;
    for (int j : st.sets.on_channel(i)) {
        interf += st.alloc.d2d_power[j] * inst.gain_d2d_bs[j];
        q += st.prices.cue_to_d2d(i, j) * cost.cue_to_d2d(i, j);
    }
    return {inst.gain_cue[i] / (inst.noise_w + interf), q};
}

double cue_best_response(const NetworkInstance& inst, const CostModel& cost,
                         const GameState& st, int i) {
    const UtilityConstants u = cue_constants(inst, cost, st, i);
    return closed_form_power(u.cost_rate, u.effective_gain, inst.cue_p_max[i]);
}

namespace {

// Constants for pair j operating on channel i. j is skipped in the sharer
// sums, which makes the same expression serve both keep and change moves.
UtilityConstants d2d_constants_on(const NetworkInstance& inst, const CostModel& cost,
                                  const GameState& st, int j, int i) {
    double interf = st.alloc.cue_power[i] * inst.gain_cue_d2d(i, j);
    double q = st.prices.d2d_to_bs[j] * cost.d2d_to_bs(j, i);
    for (int k : st.sets.on_channel(i)) {
        if (k == j) continue;
        interf += st.alloc.d2d_power[k] * inst.gain_d2d_d2d(k, j);
        q += st.prices.d2d_to_d2d(j, k) * cost.d2d_to_d2d(j, k);
    }
    return {inst.gain_d2d[j] / (inst.noise_w + interf), q};
}

}  // namespace

UtilityConstants d2d_keep_constants(const NetworkInstance& inst, const CostModel& cost,
                                    const GameState& st, int j) {
    if (!st.alloc.admitted(j))
        throw std::logic_error("d2d_keep_constants: pair is not on a channel");
    return d2d_constants_on(inst, cost, st, j, st.alloc.channel_of[j]);
}

UtilityConstants d2d_change_constants(const NetworkInstance& inst, const CostModel& cost,
                                      const GameState& st, int j, int target) {
    if (target == st.alloc.channel_of[j])
        throw std::logic_error("d2d_change_constants: target is the current channel");
    return d2d_constants_on(inst, cost, st, j, target);
}

StrategyChoice d2d_select_strategy(const NetworkInstance& inst, const CostModel& cost,
                                   const GameState& st, int j) {
    StrategyChoice best{st.alloc.n_channels, 0.0, 0.0};  // parking pays exactly 0
    for (int i = 0; i < st.alloc.n_channels; ++i) {
        const UtilityConstants u = d2d_constants_on(inst, cost, st, j, i);
        const double p = closed_form_power(u.cost_rate, u.effective_gain, inst.d2d_p_max[j]);
        const double f = payoff(p, u);
        if (f > best.payoff) best = {i, p, f};  // strict: ties keep the earlier choice
    }
    return best;
}

double game_sweep(const NetworkInstance& inst, const CostModel& cost, GameState& st,
                  int* channel_switches) {
    double delta2 = 0.0;
    int switches = 0;
    for (int i = 0; i < inst.n_cues(); ++i) {
        const double p = cue_best_response(inst, cost, st, i);
        const double d = p - st.alloc.cue_power[i];
        delta2 += d * d;
        st.alloc.cue_power[i] = p;
    }
    for (int j = 0; j < inst.m_d2d(); ++j) {
        const StrategyChoice s = d2d_select_strategy(inst, cost, st, j);
        const double d = s.power - st.alloc.d2d_power[j];
        delta2 += d * d;
        if (s.channel != st.alloc.channel_of[j]) {
            st.sets.move(j, st.alloc.channel_of[j], s.channel);
            st.alloc.channel_of[j] = s.channel;
            ++switches;
        }
        st.alloc.d2d_power[j] = s.power;
    }
    if (channel_switches) *channel_switches = switches;
    return std::sqrt(delta2);
}

}  // namespace d2d
