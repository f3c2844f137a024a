#include "d2d/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "d2d/units.hpp"

namespace d2d {

Allocation zero_allocation(const NetworkInstance& inst) {
    Allocation a;
    a.n_channels = inst.n_cues();
    a.cue_power.assign(inst.n_cues(), 0.0);
    a.d2d_power.assign(inst.m_d2d(), 0.0);
    a.channel_of.assign(inst.m_d2d(), inst.n_cues());
    return a;
}

void SharingIndexSets::move(int j, int from, int to) {
    if (from == to) return;
    auto& src = members[from];
    src.erase(std::lower_bound(src.begin(), src.end(), j));
    auto& dst = members[to];
    dst.insert(std::lower_bound(dst.begin(), dst.end(), j), j);
}

SharingIndexSets rebuild_sharing_sets(const Allocation& alloc) {
    SharingIndexSets sets;
    sets.members.assign(alloc.n_channels + 1, {});
    for (int j = 0; j < static_cast<int>(alloc.channel_of.size()); ++j)
        sets.members[alloc.channel_of[j]].push_back(j);  // j ascending by construction
    return sets;
}

double sinr_cue(const NetworkInstance& inst, const Allocation& alloc, int i) {
    double interf = 0.0;
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (alloc.channel_of[j] == i) interf += alloc.d2d_power[j] * inst.gain_d2d_bs[j];
    return alloc.cue_power[i] * inst.gain_cue[i] / (inst.noise_w + interf);
}

double sinr_d2d(const NetworkInstance& inst, const Allocation& alloc, int j) {
    if (!alloc.admitted(j))
        throw std::logic_error("sinr_d2d: pair " + std::to_string(j) + " is not admitted");
    const int i = alloc.channel_of[j];
    double interf = alloc.cue_power[i] * inst.gain_cue_d2d(i, j);
    for (int k = 0; k < inst.m_d2d(); ++k)
        if (k != j && alloc.channel_of[k] == i) interf += alloc.d2d_power[k] * inst.gain_d2d_d2d(k, j);
    return alloc.d2d_power[j] * inst.gain_d2d[j] / (inst.noise_w + interf);
}

std::vector<double> cue_rates(const NetworkInstance& inst, const Allocation& alloc) {
    std::vector<double> r(inst.n_cues());
    for (int i = 0; i < inst.n_cues(); ++i) r[i] = rate_from_sinr(sinr_cue(inst, alloc, i));
    return r;
}

std::vector<double> d2d_rates(const NetworkInstance& inst, const Allocation& alloc) {
    std::vector<double> r(inst.m_d2d(), 0.0);
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (alloc.admitted(j)) r[j] = rate_from_sinr(sinr_d2d(inst, alloc, j));
    return r;
}

double sum_rate(const NetworkInstance& inst, const Allocation& alloc) {
    double total = 0.0;
    for (int i = 0; i < inst.n_cues(); ++i) total += rate_from_sinr(sinr_cue(inst, alloc, i));
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (alloc.admitted(j)) total += rate_from_sinr(sinr_d2d(inst, alloc, j));
    return total;
}

bool qos_satisfied(const NetworkInstance& inst, const Allocation& alloc) {
    for (int i = 0; i < inst.n_cues(); ++i)
        if (sinr_cue(inst, alloc, i) < inst.cue_sinr_min[i]) return false;
    for (int j = 0; j < inst.m_d2d(); ++j)
        if (alloc.admitted(j) && sinr_d2d(inst, alloc, j) < inst.d2d_sinr_min[j]) return false;
    return true;
}

void validate_allocation(const NetworkInstance& inst, const Allocation& alloc) {
    auto fail = [](const std::string& what) { throw std::logic_error("Allocation: " + what); };
    if (alloc.n_channels != inst.n_cues()) fail("n_channels mismatch");
    if (static_cast<int>(alloc.cue_power.size()) != inst.n_cues()) fail("cue_power size");
    if (static_cast<int>(alloc.d2d_power.size()) != inst.m_d2d()) fail("d2d_power size");
    if (static_cast<int>(alloc.channel_of.size()) != inst.m_d2d()) fail("channel_of size");
    for (int i = 0; i < inst.n_cues(); ++i) {
        if (!(alloc.cue_power[i] >= 0.0) || alloc.cue_power[i] > inst.cue_p_max[i] * (1.0 + 1e-12))
            fail("CUE power out of range at " + std::to_string(i));
    }
    for (int j = 0; j < inst.m_d2d(); ++j) {
        if (alloc.channel_of[j] < 0 || alloc.channel_of[j] > alloc.n_channels)
            fail("channel index out of range at " + std::to_string(j));
        if (!(alloc.d2d_power[j] >= 0.0) || alloc.d2d_power[j] > inst.d2d_p_max[j] * (1.0 + 1e-12))
            fail("D2D power out of range at " + std::to_string(j));
        if (!alloc.admitted(j) && alloc.d2d_power[j] != 0.0)
            fail("parked pair with nonzero power at " + std::to_string(j));
    }
}

bool structurally_infeasible(const NetworkInstance& inst) {
    for (int i = 0; i < inst.n_cues(); ++i)
        if (inst.cue_p_max[i] * inst.gain_cue[i] / inst.noise_w < inst.cue_sinr_min[i]) return true;
    return false;
}

}  // namespace d2d
