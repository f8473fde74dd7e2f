// Brute-force reference implementations used to pin expected values.
// Everything here follows the definitional enumeration route and stays
// independent of the library's computational shortcuts: AP and Prec@k
// enumerate tie-block arrangements, AUC counts pairs, Wilcoxon walks all
// sign assignments, and rank correlations go through O(n^2) counting.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace oracle {

// rank 1 = largest, average ranks for ties; counting formulation
inline std::vector<double> ranks_desc(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t greater = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] > x[i]) ++greater;
            if (j != i && x[j] == x[i]) ++equal;
        }
        r[i] = static_cast<double>(greater) + 1.0 + static_cast<double>(equal) / 2.0;
    }
    return r;
}

inline double pearson(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

inline double spearman(std::span<const double> x, std::span<const double> y) {
    const auto rx = ranks_desc(x);
    const auto ry = ranks_desc(y);
    return pearson(rx, ry);
}

// tau-b by direct pair counting
inline double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) {
                ++ties_x;
                ++ties_y;
            } else if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if (dx * dy > 0.0) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double n0 = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return (concordant - discordant) /
           std::sqrt((n0 - ties_x) * (n0 - ties_y));
}

struct tie_block {
    std::size_t size = 0;
    std::size_t positives = 0;
};

inline std::vector<tie_block> blocks_desc(std::span<const double> scores,
                                          std::span<const int> labels) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<tie_block> blocks;
    std::size_t i = 0;
    while (i < order.size()) {
        tie_block blk;
        const double v = scores[order[i]];
        while (i < order.size() && scores[order[i]] == v) {
            blk.size += 1;
            blk.positives += static_cast<std::size_t>(labels[order[i]] != 0);
            ++i;
        }
        blocks.push_back(blk);
    }
    return blocks;
}

// expected AP over uniformly random within-block orderings, by explicit
// enumeration of positive placements in each block
inline double average_precision(std::span<const double> scores, std::span<const int> labels) {
    const auto blocks = blocks_desc(scores, labels);
    std::size_t n_pos = 0;
    for (int y : labels) n_pos += static_cast<std::size_t>(y != 0);

    double total = 0.0;
    std::size_t before = 0, pos_before = 0;
    for (const tie_block& blk : blocks) {
        if (blk.positives > 0) {
            double contribution = 0.0;
            std::size_t arrangements = 0;
            for (std::uint32_t mask = 0; mask < (1u << blk.size); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != blk.positives) {
                    continue;
                }
                ++arrangements;
                std::size_t seen = 0;
                for (std::size_t j = 0; j < blk.size; ++j) {
                    if ((mask >> j) & 1u) {
                        ++seen;
                        contribution += static_cast<double>(pos_before + seen) /
                                        static_cast<double>(before + j + 1);
                    }
                }
            }
            total += contribution / static_cast<double>(arrangements);
        }
        before += blk.size;
        pos_before += blk.positives;
    }
    return total / static_cast<double>(n_pos);
}

inline double precision_at_k(std::span<const double> scores, std::span<const int> labels,
                             std::size_t k) {
    const auto blocks = blocks_desc(scores, labels);
    double hits = 0.0;
    std::size_t taken = 0;
    for (const tie_block& blk : blocks) {
        if (taken >= k) break;
        const std::size_t want = std::min(blk.size, k - taken);
        if (want == blk.size) {
            hits += static_cast<double>(blk.positives);
        } else {
            // enumerate placements, count positives among the first `want`
            double acc = 0.0;
            std::size_t arrangements = 0;
            for (std::uint32_t mask = 0; mask < (1u << blk.size); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != blk.positives) {
                    continue;
                }
                ++arrangements;
                for (std::size_t j = 0; j < want; ++j) acc += (mask >> j) & 1u;
            }
            hits += acc / static_cast<double>(arrangements);
        }
        taken += want;
    }
    return hits / static_cast<double>(k);
}

inline double roc_auc(std::span<const double> scores, std::span<const int> labels) {
    double wins = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (labels[i] == 0) continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j] != 0) continue;
            ++pairs;
            if (scores[i] > scores[j]) wins += 1.0;
            else if (scores[i] == scores[j]) wins += 0.5;
        }
    }
    return wins / static_cast<double>(pairs);
}

struct wilcoxon_tail {
    double p_ge = 1.0;   // P(W >= w_obs)
    double p_eq = 0.0;   // P(W == w_obs)
    double w_obs = 0.0;
    std::size_t n = 0;
};

// full 2^n sign-assignment enumeration of the paired signed-rank test
inline wilcoxon_tail wilcoxon_exact(std::span<const double> a, std::span<const double> b) {
    std::vector<double> abs_diff;
    std::vector<int> sign;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d == 0.0) continue;
        abs_diff.push_back(std::fabs(d));
        sign.push_back(d > 0.0 ? 1 : -1);
    }
    wilcoxon_tail out;
    out.n = abs_diff.size();
    if (abs_diff.empty()) return out;

    const auto ranks = ranks_desc([&] {
        std::vector<double> neg(abs_diff.size());
        for (std::size_t i = 0; i < abs_diff.size(); ++i) neg[i] = -abs_diff[i];
        return neg;
    }());

    for (std::size_t i = 0; i < abs_diff.size(); ++i) {
        if (sign[i] > 0) out.w_obs += ranks[i];
    }

    std::uint64_t ge = 0, eq = 0;
    const std::uint64_t total = 1ull << abs_diff.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double w = 0.0;
        for (std::size_t i = 0; i < abs_diff.size(); ++i) {
            if ((mask >> i) & 1ull) w += ranks[i];
        }
        if (w >= out.w_obs - 1e-9) ++ge;
        if (std::fabs(w - out.w_obs) < 1e-9) ++eq;
    }
    out.p_ge = static_cast<double>(ge) / static_cast<double>(total);
    out.p_eq = static_cast<double>(eq) / static_cast<double>(total);
    return out;
}

// medoid by exhaustive similarity row sums
template <typename SimFn>
std::size_t medoid(std::size_t n_models, SimFn&& sim) {
    std::size_t best = 0;
    double best_sum = -1e300;
    for (std::size_t i = 0; i < n_models; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_models; ++j) {
            if (j != i) acc += sim(i, j);
        }
        if (acc > best_sum) {
            best_sum = acc;
            best = i;
        }
    }
    return best;
}

} // namespace oracle
