#pragma once

#include <vector>

#include "d2d/common.hpp"

namespace d2d {

// Maximum-weight bipartite matching for a dense non-negative weight matrix.
// Returns match[l] = column matched to row l, or -1. Rows may stay unmatched
// only when the matrix is wider than tall in the transposed sense; zero-weight
// matches are returned as matched and are up to the caller to prune.
std::vector<int> max_weight_matching(const Mat& w);

}  // namespace d2d
