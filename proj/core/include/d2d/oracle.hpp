#pragma once

#include "d2d/game.hpp"

namespace d2d {

// Brute-force argmax of log2(1 + p*gamma) - p*q over the uniform grid
// {0, step, 2*step, ..., p_max}. Deliberately independent of the closed-form
// expression: the grid is enumerated point by point. Returns the grid argmax
// (lowest index on exact ties).
double grid_best_power(double gamma, double q, double p_max, double step);

// Largest unilateral payoff improvement any player can find on a power grid,
// scanning every channel move (and parking) for pairs. grid_step_rel scales
// each player's own cap. A Nash allocation reports ~0.
struct DeviationReport {
    double max_improvement = 0.0;
    bool player_is_cue = false;
    int player = -1;      // CUE or pair index of the worst offender
    int best_channel = -1;
    double best_power = 0.0;
};

DeviationReport verify_equilibrium(const NetworkInstance& inst, double alpha_cost,
                                   const Allocation& alloc, const PriceVector& prices,
                                   double grid_step_rel);

// Exhaustive search over every assignment of pairs to channels/parked and
// every power combination on a per-player uniform grid of `grid_points`
// levels (0 .. p_max inclusive). QoS floors are enforced for CUEs and for
// admitted pairs. Channels are independent once the assignment is fixed, so
// powers are enumerated per channel group rather than jointly.
// Guarded to tiny sizes; throws std::invalid_argument beyond them.
struct ExhaustiveResult {
    bool feasible = false;
    double best_sum_rate = 0.0;
    Allocation best_alloc;
};

ExhaustiveResult exhaustive_small(const NetworkInstance& inst, int grid_points);

}  // namespace d2d
