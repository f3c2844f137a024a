#pragma once

#include "d2d/game.hpp"

namespace d2d {

// Multiplicative price adaptation. A violated QoS floor raises the prices
// charged to the violator's interferers by (1 + lambda_up); comfortable
// margin (rate above floor * (1 + slack)) lowers them by (1 - lambda_down);
// inside the dead band nothing moves.
struct PricingParams {
    double lambda_up = 0.1;
    double lambda_down = 0.05;
    double slack = 0.2;
    double theta_init = 0.01;

    // The published D2D relaxation test compares the *CUE's* rate against the
    // D2D floor, which reads like a transcription slip; by default the pair's
    // own rate is used. Set true to reproduce the literal rule.
    bool d2d_relax_on_cue_rate = false;

    void validate() const;  // throws std::invalid_argument
};

// React to CUE i's QoS state: scales d2d_to_bs for every pair sharing channel
// i (up on violation, down on comfortable margin). Returns how many price
// entries were scaled.
int update_prices_for_cue(const NetworkInstance& inst, GameState& st, int i,
                          const PricingParams& pp);

// React to admitted pair j's QoS state: scales cue_to_d2d(i, j) for the
// channel-owning CUE and d2d_to_d2d(k, j) for every co-sharer k. No-op for
// parked pairs. Returns how many price entries were scaled.
int update_prices_for_d2d(const NetworkInstance& inst, GameState& st, int j,
                          const PricingParams& pp);

// Whole updating: every CUE, then every pair, against a rate snapshot taken
// before any change (price moves never feed back into rates within a round).
int whole_update(const NetworkInstance& inst, GameState& st, const PricingParams& pp);

// Step-by-step updating: only CUE i and the pairs currently sharing channel i.
int step_update(const NetworkInstance& inst, GameState& st, int i, const PricingParams& pp);

}  // namespace d2d
