#include "d2d/matching.hpp"

#include <algorithm>
#include <limits>

namespace d2d {

// Hungarian algorithm with row/column potentials on the min-cost form
// (cost = -weight), O(rows^2 * cols). Standard shortest-augmenting-path
// formulation with 1-based sentinel row/column 0.
std::vector<int> max_weight_matching(const Mat& w) {
    const bool transpose = w.rows() > w.cols();
    const int n = transpose ? w.cols() : w.rows();  // n <= m
    const int m = transpose ? w.rows() : w.cols();
    auto cost = [&](int r, int c) { return transpose ? -w(c, r) : -w(r, c); };

    const double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> match(w.rows(), -1);
    for (int j = 1; j <= m; ++j) {
        if (p[j] == 0) continue;
        if (transpose)
            match[j - 1] = p[j] - 1;
        else
            match[p[j] - 1] = j - 1;
    }
    return match;
}

}  // namespace d2d
