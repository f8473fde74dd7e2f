#pragma once

#include <span>

namespace uoms::eval {

struct wilcoxon_result {
    double p = 1.0;
    double statistic = 0.0;       // W+ over the nonzero differences
    std::size_t n_effective = 0;  // pairs remaining after zero-difference drop
    bool no_signal = false;       // all differences were zero
};

// One-sided paired Wilcoxon signed-rank test of "a > b". Zero differences
// are dropped. Up to `exact_limit` nonzero pairs the tail P(W >= w) is
// exact (rank-sum counting over all 2^n sign assignments); beyond that a
// normal approximation with tie and continuity correction is used.
wilcoxon_result wilcoxon_one_sided(std::span<const double> a, std::span<const double> b,
                                   std::size_t exact_limit = 25);

} // namespace uoms::eval
