#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace uoms::standalone {

// Two clusters on the score axis: the o_t highest scores and the rest.
// Ties at the boundary break by sample index (lower index enters C_o).
struct score_split {
    std::vector<std::size_t> outlier_idx; // C_o, |C_o| = o_t
    std::vector<std::size_t> inlier_idx;  // C_i
    double outlier_center = 0.0;          // c_o
    double inlier_center = 0.0;           // c_i
    bool degenerate = false;              // c_o == c_i (e.g. all-equal scores)
};

// Throws BadK unless 0 < o_t < n.
score_split split_by_top_k(std::span<const double> scores, std::size_t o_t);

} // namespace uoms::standalone
