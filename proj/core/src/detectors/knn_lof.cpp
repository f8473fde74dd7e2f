#include <algorithm>
#include <cmath>

#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"

namespace uoms::detectors {

namespace {
constexpr double lrd_cap = 1e12;
}

std::vector<double> knn_score(const matrix& X, std::size_t k, knn_method method,
                              metric_kind metric, double p) {
    const knn_table table = build_knn(X, k, metric, p);
    const std::size_t n = X.rows();
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& d = table.dist[i];
        switch (method) {
        case knn_method::largest:
            scores[i] = d.back();
            break;
        case knn_method::mean: {
            double s = 0.0;
            for (double v : d) s += v;
            scores[i] = s / static_cast<double>(k);
            break;
        }
        case knn_method::median:
            // d is sorted ascending
            scores[i] = (k % 2 == 1) ? d[k / 2] : 0.5 * (d[k / 2 - 1] + d[k / 2]);
            break;
        }
    }
    return scores;
}

std::vector<double> lof_score(const matrix& X, std::size_t k, metric_kind metric, double p) {
    const knn_table table = build_knn(X, k, metric, p);
    const std::size_t n = X.rows();

    std::vector<double> kdist(n);
    for (std::size_t i = 0; i < n; ++i) kdist[i] = table.dist[i].back();

    std::vector<double> lrd(n);
    for (std::size_t i = 0; i < n; ++i) {
        double reach_sum = 0.0;
        for (std::size_t q = 0; q < k; ++q) {
            const std::size_t o = table.index[i][q];
            reach_sum += std::max(kdist[o], table.dist[i][q]);
        }
        lrd[i] = reach_sum > 0.0 ? static_cast<double>(k) / reach_sum : lrd_cap;
    }

    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        double neighbor_lrd = 0.0;
        for (std::size_t q = 0; q < k; ++q) neighbor_lrd += lrd[table.index[i][q]];
        scores[i] = neighbor_lrd / (static_cast<double>(k) * lrd[i]);
    }
    return scores;
}

} // namespace uoms::detectors
