#pragma once

#include <span>
#include <vector>

namespace uoms {

// Fractional ranks over one score column. Rank 1 is the most anomalous
// (largest) score; tied scores carry the average of the positions they
// span, so the rank sum is always n(n+1)/2.
struct rank_vector {
    std::vector<double> ranks;

    std::size_t size() const noexcept { return ranks.size(); }
    double operator[](std::size_t i) const { return ranks[i]; }
};

// Throws EmptyInput on an empty column. Deterministic under ties.
rank_vector to_rank_vector(std::span<const double> column);

// true when every entry of the column is identical (a constant detector
// output); such a column still ranks, but similarity kernels treat it
// as degenerate.
bool is_constant_column(std::span<const double> column);

} // namespace uoms
