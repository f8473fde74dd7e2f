#include <cmath>
#include <limits>

#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"

namespace uoms::detectors {

namespace {

void require_pair_k(std::size_t k, std::size_t n) {
    if (k < 2 || k >= n) {
        fail(errc::bad_hyperparameter,
             "n_neighbors=" + std::to_string(k) + " requires 2 <= k < n=" + std::to_string(n));
    }
}

// Average chaining distance of the set-based nearest path through
// {p} + neighborhood. Edge i gets weight 2(k+1-i) / (k(k+1)).
double avg_chaining_distance(const matrix& X, std::size_t p,
                             const std::vector<std::size_t>& neighborhood) {
    const std::size_t k = neighborhood.size();
    std::vector<std::size_t> remaining = neighborhood;
    std::vector<double> dist_to_set(k);
    for (std::size_t q = 0; q < k; ++q) {
        dist_to_set[q] =
            point_distance(X.row(p), X.row(remaining[q]), metric_kind::euclidean);
    }

    double ac = 0.0;
    const double denom = static_cast<double>(k) * static_cast<double>(k + 1);
    for (std::size_t step = 1; step <= k; ++step) {
        std::size_t best = 0;
        for (std::size_t q = 1; q < remaining.size(); ++q) {
            if (dist_to_set[q] < dist_to_set[best]) best = q;
        }
        const double edge = dist_to_set[best];
        const std::size_t added = remaining[best];
        ac += edge * 2.0 * static_cast<double>(k + 1 - step) / denom;

        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
        dist_to_set.erase(dist_to_set.begin() + static_cast<std::ptrdiff_t>(best));
        for (std::size_t q = 0; q < remaining.size(); ++q) {
            const double d =
                point_distance(X.row(added), X.row(remaining[q]), metric_kind::euclidean);
            if (d < dist_to_set[q]) dist_to_set[q] = d;
        }
    }
    return ac;
}

} // namespace

std::vector<double> cof_score(const matrix& X, std::size_t k) {
    const std::size_t n = X.rows();
    require_pair_k(k, n);
    const knn_table table = build_knn(X, k, metric_kind::euclidean);

    std::vector<double> ac(n);
    for (std::size_t i = 0; i < n; ++i) ac[i] = avg_chaining_distance(X, i, table.index[i]);

    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        double neighbor_ac = 0.0;
        for (std::size_t o : table.index[i]) neighbor_ac += ac[o];
        if (neighbor_ac > 0.0) {
            scores[i] = ac[i] * static_cast<double>(k) / neighbor_ac;
        } else {
            // whole neighborhood chains through duplicates
            scores[i] = ac[i] > 0.0 ? 1e12 : 1.0;
        }
    }
    return scores;
}

std::vector<double> abod_score(const matrix& X, std::size_t k) {
    const std::size_t n = X.rows();
    const std::size_t d = X.cols();
    require_pair_k(k, n);
    const knn_table table = build_knn(X, k, metric_kind::euclidean);

    std::vector<double> scores(n);
    std::vector<double> va(d), vb(d);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0, sum_sq = 0.0;
        std::size_t count = 0;
        const auto& nbrs = table.index[i];
        for (std::size_t a = 0; a + 1 < nbrs.size(); ++a) {
            double na = 0.0;
            for (std::size_t f = 0; f < d; ++f) {
                va[f] = X(nbrs[a], f) - X(i, f);
                na += va[f] * va[f];
            }
            if (na == 0.0) continue;
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                double nb = 0.0, dot = 0.0;
                for (std::size_t f = 0; f < d; ++f) {
                    vb[f] = X(nbrs[b], f) - X(i, f);
                    nb += vb[f] * vb[f];
                    dot += va[f] * vb[f];
                }
                if (nb == 0.0) continue;
                const double w = dot / (na * nb);
                sum += w;
                sum_sq += w * w;
                ++count;
            }
        }
        if (count == 0) {
            scores[i] = 0.0; // all neighbors duplicated onto the point
            continue;
        }
        const double mean = sum / static_cast<double>(count);
        const double var = sum_sq / static_cast<double>(count) - mean * mean;
        scores[i] = -std::max(var, 0.0);
    }
    return scores;
}

} // namespace uoms::detectors
