#pragma once

#include <string>
#include <vector>

#include "d2d/pricing.hpp"

namespace d2d {

enum class PriceScheme {
    kStepByStep,  // one CUE's channel re-priced per outer pass, round robin
    kWhole,       // every price re-examined each outer pass
};

struct DseraConfig {
    PricingParams pricing;
    PriceScheme price_scheme = PriceScheme::kStepByStep;

    double alpha_cost = 3.76;  // distance-ratio exponent in the price cost terms

    // Inner loop: Gauss-Seidel sweeps until the stacked power change is below
    // epsilon_rel * ||P_max|| or max_inner_sweeps is hit.
    double epsilon_rel = 1e-6;
    int max_inner_sweeps = 60;

    // Best-response sweeps can settle into an orbit instead of a fixed point
    // (a few pairs trading channels each sweep, power deltas no longer
    // shrinking). Cut the inner loop after this many sweeps without a new
    // minimum power delta; the next price update perturbs the orbit anyway.
    // Contracting phases set a new minimum nearly every sweep, so a short
    // patience distinguishes the two regimes cheaply. 0 disables the cutoff
    // and always runs to epsilon or max_inner_sweeps.
    int inner_plateau_window = 3;

    // Outer passes. Step-by-step re-prices one channel per pass, so dense
    // instances routinely spend the whole budget; exhausted runs return the
    // closest-to-feasible state seen (fewest unmet floors, then highest sum
    // rate) rather than whatever state the final pass happened to leave.
    int max_outer_passes = 500;

    // Skip a pass when the addressed CUE and all its current sharers already
    // meet QoS. Applied only with a non-empty sharer set: skipping on the
    // vacuous all-sharers-satisfied reading would freeze an unserved CUE that
    // has no sharers to re-price, deadlocking the loop at startup.
    bool skip_satisfied_channels = true;

    // Treat a full cycle of passes that changes no power, assignment or price
    // as a fixed point and stop even though some floor is still unmet.
    bool detect_stall = true;

    // Optional per-pass trace CSV (outer pass, inner sweeps, sum rate,
    // violations, admitted count). Empty string disables.
    std::string trace_path;
};

struct RunOutcome {
    Allocation alloc;
    PriceVector prices;

    bool qos_satisfied = false;          // exact recheck of the returned allocation
    // The inner loop that produced the returned allocation reached the power
    // tolerance, so the allocation is a best-response fixed point of the
    // returned prices (as opposed to an orbit cut by the plateau window).
    bool converged = false;
    bool structurally_infeasible = false;
    bool stalled = false;                // fixed point reached with floors unmet
    bool pass_budget_exhausted = false;

    int outer_passes = 0;
    long inner_sweeps = 0;
    int admitted = 0;

    std::vector<double> cue_rates;
    std::vector<double> d2d_rates;
    double sum_rate = 0.0;
    double wall_ms = 0.0;
};

// Distributed admission, spectrum and power allocation: alternate the pricing
// game's inner equilibrium search with price adaptation until every CUE and
// every admitted pair meets its SINR floor.
RunOutcome run_dsera(const NetworkInstance& inst, const DseraConfig& cfg);

// run_dsera with whole updating.
RunOutcome run_scheme3(const NetworkInstance& inst, const DseraConfig& cfg);

}  // namespace d2d
