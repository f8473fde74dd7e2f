#include <algorithm>
#include <cmath>
#include <numeric>

#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"
#include "uoms/rng.hpp"

namespace uoms::detectors {
namespace {

constexpr double euler_gamma = 0.5772156649015329;

// expected path length of an unsuccessful BST search over m points
double harmonic_correction(std::size_t m) {
    if (m <= 1) return 0.0;
    if (m == 2) return 1.0;
    const double h = std::log(static_cast<double>(m - 1)) + euler_gamma;
    return 2.0 * h - 2.0 * static_cast<double>(m - 1) / static_cast<double>(m);
}

struct iso_node {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double leaf_depth = 0.0; // depth + c(size) at the leaf
};

struct iso_tree {
    std::vector<iso_node> nodes;
    std::vector<std::size_t> features;

    double path_length(std::span<const double> x) const {
        std::int32_t cur = 0;
        while (true) {
            const iso_node& node = nodes[static_cast<std::size_t>(cur)];
            if (node.feature < 0) return node.leaf_depth;
            cur = x[static_cast<std::size_t>(node.feature)] < node.threshold ? node.left
                                                                             : node.right;
        }
    }
};

std::int32_t grow(iso_tree& tree, const matrix& X, std::vector<std::size_t>& ids,
                  std::size_t lo, std::size_t hi, std::size_t depth, std::size_t depth_limit,
                  rng& r) {
    const std::size_t size = hi - lo;
    const auto make_leaf = [&]() {
        iso_node leaf;
        leaf.leaf_depth = static_cast<double>(depth) + harmonic_correction(size);
        tree.nodes.push_back(leaf);
        return static_cast<std::int32_t>(tree.nodes.size() - 1);
    };

    if (size <= 1 || depth >= depth_limit) return make_leaf();

    // candidate features with spread among this node's samples
    std::vector<std::size_t> usable;
    for (std::size_t f : tree.features) {
        double lo_v = X(ids[lo], f), hi_v = lo_v;
        for (std::size_t q = lo + 1; q < hi; ++q) {
            lo_v = std::min(lo_v, X(ids[q], f));
            hi_v = std::max(hi_v, X(ids[q], f));
        }
        if (hi_v > lo_v) usable.push_back(f);
    }
    if (usable.empty()) return make_leaf();

    const std::size_t f = usable[static_cast<std::size_t>(r.below(usable.size()))];
    double lo_v = X(ids[lo], f), hi_v = lo_v;
    for (std::size_t q = lo + 1; q < hi; ++q) {
        lo_v = std::min(lo_v, X(ids[q], f));
        hi_v = std::max(hi_v, X(ids[q], f));
    }
    const double threshold = r.uniform(lo_v, hi_v);

    auto mid_it = std::partition(ids.begin() + static_cast<std::ptrdiff_t>(lo),
                                 ids.begin() + static_cast<std::ptrdiff_t>(hi),
                                 [&](std::size_t id) { return X(id, f) < threshold; });
    std::size_t mid = static_cast<std::size_t>(mid_it - ids.begin());
    if (mid == lo || mid == hi) {
        // uniform(lo_v, hi_v) with lo_v < hi_v keeps both sides non-empty
        // except for floating pathologies; fall back to a leaf then
        return make_leaf();
    }

    const std::size_t self = tree.nodes.size();
    tree.nodes.emplace_back();
    tree.nodes[self].feature = static_cast<int>(f);
    tree.nodes[self].threshold = threshold;
    const std::int32_t left = grow(tree, X, ids, lo, mid, depth + 1, depth_limit, r);
    const std::int32_t right = grow(tree, X, ids, mid, hi, depth + 1, depth_limit, r);
    tree.nodes[self].left = left;
    tree.nodes[self].right = right;
    return static_cast<std::int32_t>(self);
}

} // namespace

std::vector<double> iforest_score(const matrix& X, std::size_t n_estimators,
                                  double max_features_fraction, std::uint64_t seed) {
    const std::size_t n = X.rows();
    const std::size_t d = X.cols();
    if (n_estimators < 1) fail(errc::bad_hyperparameter, "n_estimators must be >= 1");
    if (!(max_features_fraction > 0.0) || max_features_fraction > 1.0) {
        fail(errc::bad_hyperparameter, "max_features fraction must be in (0, 1]");
    }

    const std::size_t subsample = std::min<std::size_t>(256, n);
    const std::size_t n_features = std::min<std::size_t>(
        d, static_cast<std::size_t>(std::ceil(max_features_fraction * static_cast<double>(d))));
    const std::size_t depth_limit = static_cast<std::size_t>(
        std::ceil(std::log2(std::max<double>(2.0, static_cast<double>(subsample)))));

    std::vector<double> mean_path(n, 0.0);
    for (std::size_t t = 0; t < n_estimators; ++t) {
        rng tree_rng(mix_seed(seed, t));
        iso_tree tree;
        tree.features = tree_rng.sample_without_replacement(d, n_features);
        std::sort(tree.features.begin(), tree.features.end());

        std::vector<std::size_t> ids = tree_rng.sample_without_replacement(n, subsample);
        grow(tree, X, ids, 0, ids.size(), 0, depth_limit, tree_rng);

        for (std::size_t i = 0; i < n; ++i) mean_path[i] += tree.path_length(X.row(i));
    }

    const double norm = harmonic_correction(subsample);
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double e = mean_path[i] / static_cast<double>(n_estimators);
        scores[i] = std::pow(2.0, -e / norm);
    }
    return scores;
}

} // namespace uoms::detectors
