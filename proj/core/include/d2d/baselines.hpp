#pragma once

#include "d2d/dsera.hpp"

namespace d2d {

// Cost-only pricing baseline: one interference price per channel, raised and
// relaxed on the owning CUE's QoS state only. CUEs transmit at full power.
// Pair strategies come from the same water-filling engine as the main
// algorithm but with the scheme's single-price cost rate.
RunOutcome run_scheme1(const NetworkInstance& inst, const DseraConfig& cfg);

// Cost-only pricing with per-link prices (pair->BS and pair->pair, weighted
// by true gain ratios). CUE QoS moves the pair->BS prices of its sharers;
// an admitted pair's QoS moves the pair->pair prices charged to co-sharers.
RunOutcome run_scheme2(const NetworkInstance& inst, const DseraConfig& cfg);

// Centralized three-step baseline: per-(CUE, pair) optimal joint two-user
// power control on a grid+closed-form scan, then maximum-weight one-to-one
// matching on the sum-rate uplift, then admission of positive-uplift matches.
RunOutcome run_3step(const NetworkInstance& inst, const DseraConfig& cfg);

// Centralized greedy baseline with multi-sharing: repeatedly admit the
// (pair, channel) candidate with the largest feasible sum-rate gain, powers
// set by a min-power QoS solve followed by one bounded improvement pass.
RunOutcome run_densecell(const NetworkInstance& inst, const DseraConfig& cfg);

}  // namespace d2d
