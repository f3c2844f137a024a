#pragma once

#include <vector>

#include "d2d/model.hpp"
#include "d2d/units.hpp"

namespace d2d {

// Interference prices. Each entry prices the interference one transmitter
// causes at one victim:
//   cue_to_d2d(i, j): CUE i's interference at pair j's receiver
//   d2d_to_bs[j]:     pair j's interference at the BS
//   d2d_to_d2d(j, k): pair j's interference at pair k's receiver (row = payer)
// Prices are per unit of *potential* damage: the cost term weights the payer's
// transmit power by a distance ratio, see CostModel.
struct PriceVector {
    Mat cue_to_d2d;               // N x M
    std::vector<double> d2d_to_bs;  // M
    Mat d2d_to_d2d;               // M x M, diagonal unused

    static PriceVector uniform(int n, int m, double theta_init);
};

// Distance-ratio cost weights (s_interferer_to_victim / s_victim_own_link)^-alpha,
// precomputed per instance. The ratio is scale-free: rescaling all coordinates
// leaves every weight unchanged.
struct CostModel {
    double alpha = 3.76;
    Mat cue_to_d2d;                  // N x M: (s(c_i, d_j)/s(d_j))^-alpha
    Mat d2d_to_d2d;                  // M x M: (s(d_j, d_k)/s(d_k))^-alpha, diag unused
    std::vector<double> d2d_bs_num;  // s(d_j, BS)^-alpha
    std::vector<double> cue_den;     // s(c_i)^alpha

    // (s(d_j, BS)/s(c_i))^-alpha
    double d2d_to_bs(int j, int i) const { return d2d_bs_num[j] * cue_den[i]; }
};

CostModel build_cost_model(const NetworkInstance& inst, double alpha);

// Linearized utility u(p) = log2(1 + p * effective_gain) - p * cost_rate, the
// per-player view with everyone else's action frozen.
struct UtilityConstants {
    double effective_gain = 0.0;  // own gain over (noise + frozen interference)
    double cost_rate = 0.0;       // total price per watt of own transmit power
};

inline double payoff(double p, const UtilityConstants& u) {
    return rate_from_sinr(p * u.effective_gain) - p * u.cost_rate;
}

// argmax over [0, p_max] of log2(1 + p*gamma) - p*q, in closed form:
// interior point 1/(q ln2) - 1/gamma clamped into the box. q == 0 caps at
// p_max. Throws std::invalid_argument for q < 0, gamma <= 0 or p_max <= 0.
double closed_form_power(double q, double gamma, double p_max);

// Mutable game state. The instance and cost model are passed alongside.
struct GameState {
    Allocation alloc;
    SharingIndexSets sets;
    PriceVector prices;
};

GameState make_initial_state(const NetworkInstance& inst, double theta_init);

UtilityConstants cue_constants(const NetworkInstance& inst, const CostModel& cost,
                               const GameState& st, int i);
double cue_best_response(const NetworkInstance& inst, const CostModel& cost,
                         const GameState& st, int i);

// Pair j evaluating its current channel (throws if parked).
UtilityConstants d2d_keep_constants(const NetworkInstance& inst, const CostModel& cost,
                                    const GameState& st, int j);
// Pair j evaluating a move onto channel `target` it does not currently occupy.
UtilityConstants d2d_change_constants(const NetworkInstance& inst, const CostModel& cost,
                                      const GameState& st, int j, int target);

struct StrategyChoice {
    int channel = 0;      // n_channels == park
    double power = 0.0;
    double payoff = 0.0;  // 0 for parking
};

// Best of: keep current channel, move to any other channel, or park. A channel
// wins only with strictly positive payoff; exact ties go to the lowest channel
// index, and parking beats any zero-payoff channel.
StrategyChoice d2d_select_strategy(const NetworkInstance& inst, const CostModel& cost,
                                   const GameState& st, int j);

// One Gauss-Seidel round: CUE power updates i = 0..N-1, then pair strategy
// updates j = 0..M-1, each applied immediately. Returns the L2 norm of the
// stacked power change and counts channel switches if asked.
double game_sweep(const NetworkInstance& inst, const CostModel& cost, GameState& st,
                  int* channel_switches = nullptr);

}  // namespace d2d
