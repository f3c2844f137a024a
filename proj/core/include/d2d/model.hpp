#pragma once

#include <vector>

#include "d2d/netgen.hpp"

namespace d2d {

// Joint channel assignment and transmit powers. channel_of[j] == n_channels
// is the parked state: the pair is not admitted and must transmit nothing.
struct Allocation {
    std::vector<double> cue_power;  // watts, one per CUE/channel
    std::vector<double> d2d_power;  // watts, one per pair (0 when parked)
    std::vector<int> channel_of;    // channel index per pair, n_channels == parked
    int n_channels = 0;

    bool admitted(int j) const { return channel_of[j] < n_channels; }
    int admitted_count() const {
        int c = 0;
        for (size_t j = 0; j < channel_of.size(); ++j) c += admitted(static_cast<int>(j)) ? 1 : 0;
        return c;
    }
};

// All pairs parked, all powers zero.
Allocation zero_allocation(const NetworkInstance& inst);

// members[i] lists the pairs sharing channel i (ascending); members[n] lists
// the parked pairs. Together they partition {0..M-1}.
struct SharingIndexSets {
    std::vector<std::vector<int>> members;

    int n_channels() const { return static_cast<int>(members.size()) - 1; }
    const std::vector<int>& on_channel(int i) const { return members[i]; }
    const std::vector<int>& parked() const { return members.back(); }

    void move(int j, int from, int to);  // preserves ascending order
};

SharingIndexSets rebuild_sharing_sets(const Allocation& alloc);

// Uplink SINR of CUE i: its own signal over noise plus the D2D transmitters
// sharing channel i.
double sinr_cue(const NetworkInstance& inst, const Allocation& alloc, int i);

// SINR at pair j's receiver: interference from the channel-owning CUE and
// from co-sharing pairs. Throws std::logic_error if j is parked — a parked
// pair has no operating point, which is different from measuring zero SINR.
double sinr_d2d(const NetworkInstance& inst, const Allocation& alloc, int j);

std::vector<double> cue_rates(const NetworkInstance& inst, const Allocation& alloc);
std::vector<double> d2d_rates(const NetworkInstance& inst, const Allocation& alloc);  // 0 when parked

// Sum of CUE rates plus rates of admitted pairs (bit/s/Hz).
double sum_rate(const NetworkInstance& inst, const Allocation& alloc);

// True when every CUE and every admitted pair meets its SINR floor.
bool qos_satisfied(const NetworkInstance& inst, const Allocation& alloc);

// Structural sanity: vector sizes, power caps, parked pairs at zero power.
// Throws std::logic_error on violation.
void validate_allocation(const NetworkInstance& inst, const Allocation& alloc);

// A CUE that cannot meet its floor even alone at full power can never be
// served; no power/assignment choice elsewhere changes that.
bool structurally_infeasible(const NetworkInstance& inst);

}  // namespace d2d
