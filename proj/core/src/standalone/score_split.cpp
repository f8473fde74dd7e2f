#include "uoms/standalone/score_split.hpp"

#include <algorithm>
#include <numeric>

#include "uoms/error.hpp"

namespace uoms::standalone {

score_split split_by_top_k(std::span<const double> scores, std::size_t o_t) {
    const std::size_t n = scores.size();
    if (o_t == 0 || o_t >= n) {
        fail(errc::bad_k, "o_t=" + std::to_string(o_t) + " must satisfy 0 < o_t < n=" +
                              std::to_string(n));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });

    score_split split;
    split.outlier_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(o_t));
    split.inlier_idx.assign(order.begin() + static_cast<std::ptrdiff_t>(o_t), order.end());
    std::sort(split.outlier_idx.begin(), split.outlier_idx.end());
    std::sort(split.inlier_idx.begin(), split.inlier_idx.end());

    double so = 0.0, si = 0.0;
    for (std::size_t i : split.outlier_idx) so += scores[i];
    for (std::size_t i : split.inlier_idx) si += scores[i];
    split.outlier_center = so / static_cast<double>(o_t);
    split.inlier_center = si / static_cast<double>(n - o_t);
    split.degenerate = split.outlier_center == split.inlier_center;
    return split;
}

} // namespace uoms::standalone
