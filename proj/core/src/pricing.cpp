#include "d2d/pricing.hpp"

#include <stdexcept>
#include <string>

#include "d2d/units.hpp"

namespace d2d {

void PricingParams::validate() const {
    auto fail = [](const char* what) { throw std::invalid_argument(std::string("PricingParams: ") + what); };
    if (!(lambda_up > 0.0)) fail("lambda_up must be positive");
    if (!(lambda_down > 0.0 && lambda_down < 1.0)) fail("lambda_down must be in (0, 1)");
    if (!(slack >= 0.0)) fail("slack must be non-negative");
    if (!(theta_init > 0.0)) fail("theta_init must be positive");
}

namespace {

enum class Band { kViolated, kComfortable, kInside };

Band classify(double rate, double rate_min, double slack) {
    if (rate < rate_min) return Band::kViolated;
    if (rate > rate_min * (1.0 + slack)) return Band::kComfortable;
    return Band::kInside;
}

double factor(Band b, const PricingParams& pp) {
    switch (b) {
        case Band::kViolated: return 1.0 + pp.lambda_up;
        case Band::kComfortable: return 1.0 - pp.lambda_down;
        default: return 1.0;
    }
}

}  // namespace

int update_prices_for_cue(const NetworkInstance& inst, GameState& st, int i,
                          const PricingParams& pp) {
    const double rate = rate_from_sinr(sinr_cue(inst, st.alloc, i));
    const Band b = classify(rate, inst.cue_rate_min[i], pp.slack);
    const double f = factor(b, pp);
    if (f == 1.0) return 0;
    int touched = 0;
    for (int j : st.sets.on_channel(i)) {
        st.prices.d2d_to_bs[j] *= f;
        ++touched;
    }
    return touched;
}

int update_prices_for_d2d(const NetworkInstance& inst, GameState& st, int j,
                          const PricingParams& pp) {
    if (!st.alloc.admitted(j)) return 0;  // parked pairs keep frozen prices
    const int i = st.alloc.channel_of[j];
    const double own_rate = rate_from_sinr(sinr_d2d(inst, st.alloc, j));
    Band b;
    if (own_rate < inst.d2d_rate_min[j]) {
        b = Band::kViolated;
    } else {
        const double relax_probe =
            pp.d2d_relax_on_cue_rate ? rate_from_sinr(sinr_cue(inst, st.alloc, i)) : own_rate;
        b = relax_probe > inst.d2d_rate_min[j] * (1.0 + pp.slack) ? Band::kComfortable
                                                                  : Band::kInside;
    }
    const double f = factor(b, pp);
    if (f == 1.0) return 0;
    int touched = 0;
    st.prices.cue_to_d2d(i, j) *= f;
    ++touched;
    for (int k : st.sets.on_channel(i)) {
        if (k == j) continue;
        st.prices.d2d_to_d2d(k, j) *= f;  // k pays for interfering at j's receiver
        ++touched;
    }
    return touched;
}

int whole_update(const NetworkInstance& inst, GameState& st, const PricingParams& pp) {
    // Each CUE's update touches only d2d_to_bs of its own sharers and each
    // pair's update touches only column j entries on its own channel, so the
    // touched sets are pairwise disjoint and sequential application equals a
    // simultaneous one.
    int touched = 0;
    for (int i = 0; i < inst.n_cues(); ++i) touched += update_prices_for_cue(inst, st, i, pp);
    for (int j = 0; j < inst.m_d2d(); ++j) touched += update_prices_for_d2d(inst, st, j, pp);
    return touched;
}

int step_update(const NetworkInstance& inst, GameState& st, int i, const PricingParams& pp) {
    int touched = update_prices_for_cue(inst, st, i, pp);
    // Iterate over a copy: updates never move pairs, but keep the loop
    // independent of the set object all the same.
    const std::vector<int> sharers = st.sets.on_channel(i);
    for (int j : sharers) touched += update_prices_for_d2d(inst, st, j, pp);
    return touched;
}

}  // namespace d2d
