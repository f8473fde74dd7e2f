#include "uoms/detectors/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uoms/error.hpp"

namespace uoms::detectors {

metric_kind metric_from_name(const std::string& name) {
    if (name == "manhattan") return metric_kind::manhattan;
    if (name == "euclidean") return metric_kind::euclidean;
    if (name == "minkowski") return metric_kind::minkowski;
    fail(errc::config_error, "unknown distance metric '" + name + "'");
}

double point_distance(std::span<const double> a, std::span<const double> b, metric_kind m,
                      double p) {
    const std::size_t d = a.size();
    switch (m) {
    case metric_kind::manhattan: {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += std::fabs(a[i] - b[i]);
        return s;
    }
    case metric_kind::euclidean: {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double diff = a[i] - b[i];
            s += diff * diff;
        }
        return std::sqrt(s);
    }
    case metric_kind::minkowski: {
        if (p == 2.0) return point_distance(a, b, metric_kind::euclidean);
        if (p == 1.0) return point_distance(a, b, metric_kind::manhattan);
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += std::pow(std::fabs(a[i] - b[i]), p);
        return std::pow(s, 1.0 / p);
    }
    }
    return 0.0;
}

knn_table build_knn(const matrix& X, std::size_t k, metric_kind m, double p) {
    const std::size_t n = X.rows();
    if (k < 1 || k >= n) {
        fail(errc::bad_hyperparameter,
             "n_neighbors=" + std::to_string(k) + " requires 1 <= k < n=" + std::to_string(n));
    }

    knn_table table;
    table.index.assign(n, {});
    table.dist.assign(n, {});

    std::vector<std::pair<double, std::size_t>> cand(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            cand[c++] = {point_distance(X.row(i), X.row(j), m, p), j};
        }
        std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                          cand.end());
        auto& idx = table.index[i];
        auto& dst = table.dist[i];
        idx.resize(k);
        dst.resize(k);
        for (std::size_t q = 0; q < k; ++q) {
            dst[q] = cand[q].first;
            idx[q] = cand[q].second;
        }
    }
    return table;
}

matrix minmax_normalize(const matrix& X) {
    matrix out(X.rows(), X.cols());
    for (std::size_t c = 0; c < X.cols(); ++c) {
        double lo = X(0, c), hi = X(0, c);
        for (std::size_t r = 1; r < X.rows(); ++r) {
            lo = std::min(lo, X(r, c));
            hi = std::max(hi, X(r, c));
        }
        const double span = hi - lo;
        for (std::size_t r = 0; r < X.rows(); ++r) {
            out(r, c) = span > 0.0 ? (X(r, c) - lo) / span : 0.0;
        }
    }
    return out;
}

} // namespace uoms::detectors
