#include "d2d/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "d2d/units.hpp"

namespace d2d {

double grid_best_power(double gamma, double q, double p_max, double step) {
    if (!(gamma > 0.0) || !(p_max > 0.0) || !(step > 0.0) || q < 0.0)
        throw std::invalid_argument("grid_best_power: bad arguments");
    const long n = static_cast<long>(std::floor(p_max / step + 1e-9));
    // Walk the grid comparing consecutive utilities. The utility difference
    //   u(p+step) - u(p) = log2(1 + step*gamma/(1 + p*gamma)) - step*q
    // is positive exactly when step*gamma/(1 + p*gamma) > 2^(step*q) - 1, an
    // exact monotone rewrite that avoids a log per point. The utility is
    // strictly concave in p, so the increments change sign at most once; the
    // argmax is the last point with a positive increment. Every grid point is
    // still visited and checked.
    const double rhs = std::expm1(step * q * kLn2);
    const double sg = step * gamma;
    long best = 0;
    double p = 0.0;
    for (long k = 0; k < n; ++k) {
        if (sg / (1.0 + p * gamma) > rhs)
            best = k + 1;
        else
            break;  // concavity: increments stay non-positive from here on
        p += step;
    }
    return static_cast<double>(best) * step;
}

namespace {

double grid_payoff(double p, const UtilityConstants& u) { return payoff(p, u); }

// Best payoff for constants u on the grid {0..p_max}, plus the argmax.
void scan_grid(const UtilityConstants& u, double p_max, double step, double* best_f,
               double* best_p) {
    const long n = static_cast<long>(std::floor(p_max / step + 1e-9));
    *best_f = 0.0;
    *best_p = 0.0;
    for (long k = 1; k <= n; ++k) {
        const double p = static_cast<double>(k) * step;
        const double f = grid_payoff(p, u);
        if (f > *best_f) {
            *best_f = f;
            *best_p = p;
        }
    }
}

}  // namespace

DeviationReport verify_equilibrium(const NetworkInstance& inst, double alpha_cost,
                                   const Allocation& alloc, const PriceVector& prices,
                                   double grid_step_rel) {
    const CostModel cost = build_cost_model(inst, alpha_cost);
    GameState st;
    st.alloc = alloc;
    st.sets = rebuild_sharing_sets(alloc);
    st.prices = prices;

    DeviationReport rep;
    auto consider = [&rep](double gain, bool is_cue, int who, int ch, double p) {
        if (gain > rep.max_improvement) rep = {gain, is_cue, who, ch, p};
    };

    for (int i = 0; i < inst.n_cues(); ++i) {
        const UtilityConstants u = cue_constants(inst, cost, st, i);
        const double now = grid_payoff(alloc.cue_power[i], u);
        double f, p;
        scan_grid(u, inst.cue_p_max[i], grid_step_rel * inst.cue_p_max[i], &f, &p);
        consider(f - now, true, i, i, p);
    }
    for (int j = 0; j < inst.m_d2d(); ++j) {
        double now = 0.0;  // parked pays zero
        if (alloc.admitted(j))
            now = grid_payoff(alloc.d2d_power[j], d2d_keep_constants(inst, cost, st, j));
        consider(0.0 - now, false, j, alloc.n_channels, 0.0);  // deviation: park
        for (int i = 0; i < alloc.n_channels; ++i) {
            UtilityConstants u;
            if (alloc.channel_of[j] == i)
                u = d2d_keep_constants(inst, cost, st, j);
            else
                u = d2d_change_constants(inst, cost, st, j, i);
            double f, p;
            scan_grid(u, inst.d2d_p_max[j], grid_step_rel * inst.d2d_p_max[j], &f, &p);
            consider(f - now, false, j, i, p);
        }
    }
    return rep;
}

ExhaustiveResult exhaustive_small(const NetworkInstance& inst, int grid_points) {
    const int n = inst.n_cues();
    const int m = inst.m_d2d();
    if (n > 3 || m > 5 || grid_points > 33 || grid_points < 2 ||
        std::pow(grid_points, m + 1) * std::pow(n + 1.0, m) > 4e9)
        throw std::invalid_argument("exhaustive_small: instance too large for exhaustion");

    auto level = [&](double p_max, int g) { return p_max * g / (grid_points - 1); };

    ExhaustiveResult best;
    best.best_alloc = zero_allocation(inst);

    std::vector<int> assign(m, 0);  // digits in base n+1; value n == parked
    Allocation work = zero_allocation(inst);

    // Channel groups do not interact, so for a fixed assignment each channel's
    // grid is enumerated independently and the best feasible group utilities
    // are summed.
    const int total_assignments = static_cast<int>(std::pow(n + 1, m) + 0.5);
    for (int a = 0; a < total_assignments; ++a) {
        int x = a;
        for (int j = 0; j < m; ++j) {
            assign[j] = x % (n + 1);
            x /= (n + 1);
        }
        for (int j = 0; j < m; ++j) {
            work.channel_of[j] = assign[j];
            work.d2d_power[j] = 0.0;
        }

        bool feasible = true;
        double total = 0.0;
        std::vector<double> best_cue_p(n, 0.0);
        std::vector<double> best_d2d_p(m, 0.0);

        for (int i = 0; i < n && feasible; ++i) {
            std::vector<int> group;
            for (int j = 0; j < m; ++j)
                if (assign[j] == i) group.push_back(j);
            const int g = static_cast<int>(group.size());

            double group_best = -1.0;
            std::vector<int> digits(g + 1, 0);
            const long combos = static_cast<long>(std::pow(grid_points, g + 1) + 0.5);
            for (long c = 0; c < combos; ++c) {
                long y = c;
                for (int d = 0; d <= g; ++d) {
                    digits[d] = static_cast<int>(y % grid_points);
                    y /= grid_points;
                }
                work.cue_power[i] = level(inst.cue_p_max[i], digits[0]);
                for (int d = 0; d < g; ++d)
                    work.d2d_power[group[d]] = level(inst.d2d_p_max[group[d]], digits[d + 1]);

                if (sinr_cue(inst, work, i) < inst.cue_sinr_min[i]) continue;
                bool ok = true;
                double value = rate_from_sinr(sinr_cue(inst, work, i));
                for (int d = 0; d < g && ok; ++d) {
                    const double s = sinr_d2d(inst, work, group[d]);
                    if (s < inst.d2d_sinr_min[group[d]]) ok = false;
                    value += rate_from_sinr(s);
                }
                if (!ok) continue;
                if (value > group_best) {
                    group_best = value;
                    best_cue_p[i] = work.cue_power[i];
                    for (int d = 0; d < g; ++d) best_d2d_p[group[d]] = work.d2d_power[group[d]];
                }
            }
            if (group_best < 0.0)
                feasible = false;
            else
                total += group_best;
        }

        if (!feasible) continue;
        if (!best.feasible || total > best.best_sum_rate) {
            best.feasible = true;
            best.best_sum_rate = total;
            best.best_alloc.channel_of = assign;
            best.best_alloc.cue_power = best_cue_p;
            best.best_alloc.d2d_power = best_d2d_p;
        }
    }
    return best;
}

}  // namespace d2d
