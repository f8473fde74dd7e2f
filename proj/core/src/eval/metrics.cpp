#include "uoms/eval/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "uoms/error.hpp"
#include "uoms/ranking.hpp"

namespace uoms::eval {
namespace {

struct tie_block {
    std::size_t size = 0;
    std::size_t positives = 0;
};

// score-descending tie blocks with per-block positive counts
std::vector<tie_block> blocks_descending(std::span<const double> scores,
                                         std::span<const int> labels) {
    if (scores.size() != labels.size()) fail(errc::shape_mismatch, "scores vs labels");
    if (scores.empty()) fail(errc::empty_input, "no scores");

    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });

    std::vector<tie_block> blocks;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        tie_block blk;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            blk.size += 1;
            blk.positives += static_cast<std::size_t>(labels[order[j]] != 0);
            ++j;
        }
        blocks.push_back(blk);
        i = j;
    }
    return blocks;
}

std::size_t count_positives(std::span<const int> labels) {
    std::size_t pos = 0;
    for (int y : labels) pos += static_cast<std::size_t>(y != 0);
    if (pos == 0 || pos == labels.size()) {
        fail(errc::degenerate_labels, "labels contain a single class");
    }
    return pos;
}

} // namespace

double average_precision(std::span<const double> scores, std::span<const int> labels) {
    const std::size_t n_pos = count_positives(labels);
    const auto blocks = blocks_descending(scores, labels);

    // Within a block of t items (p positive) at global offset s, a positive
    // sits at within-block position j with probability p/t and then sees
    // 1 + (j-1)(p-1)/(t-1) block positives at or above it in expectation.
    double total = 0.0;
    std::size_t before = 0, pos_before = 0;
    for (const tie_block& blk : blocks) {
        const double t = static_cast<double>(blk.size);
        const double p = static_cast<double>(blk.positives);
        if (blk.positives > 0) {
            for (std::size_t j = 1; j <= blk.size; ++j) {
                const double seen =
                    blk.size == 1
                        ? 1.0
                        : 1.0 + static_cast<double>(j - 1) * (p - 1.0) / (t - 1.0);
                total += (p / t) * (static_cast<double>(pos_before) + seen) /
                         static_cast<double>(before + j);
            }
        }
        before += blk.size;
        pos_before += blk.positives;
    }
    return total / static_cast<double>(n_pos);
}

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
    const std::size_t n = scores.size();
    const std::size_t n_pos = count_positives(labels);
    if (scores.size() != labels.size()) fail(errc::shape_mismatch, "scores vs labels");
    const std::size_t n_neg = n - n_pos;

    // ascending fractional ranks
    std::vector<double> neg_scores(n);
    for (std::size_t i = 0; i < n; ++i) neg_scores[i] = -scores[i];
    const rank_vector asc = to_rank_vector(neg_scores);

    double rank_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != 0) rank_sum += asc[i];
    }
    const double np = static_cast<double>(n_pos);
    return (rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

double precision_at_k(std::span<const double> scores, std::span<const int> labels,
                      std::size_t k) {
    if (k < 1 || k > scores.size()) {
        fail(errc::bad_k, "k=" + std::to_string(k) + " outside [1, n]");
    }
    count_positives(labels);
    const auto blocks = blocks_descending(scores, labels);

    double hits = 0.0;
    std::size_t taken = 0;
    for (const tie_block& blk : blocks) {
        if (taken >= k) break;
        const std::size_t want = std::min(blk.size, k - taken);
        hits += static_cast<double>(blk.positives) * static_cast<double>(want) /
                static_cast<double>(blk.size);
        taken += want;
    }
    return hits / static_cast<double>(k);
}

} // namespace uoms::eval
