#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uoms/matrix.hpp"

namespace uoms::detectors {

enum class metric_kind { manhattan, euclidean, minkowski };

metric_kind metric_from_name(const std::string& name); // throws ConfigError

double point_distance(std::span<const double> a, std::span<const double> b, metric_kind m,
                      double p = 2.0);

// Exact k nearest neighbors, self excluded, distance ties broken by index.
struct knn_table {
    std::vector<std::vector<std::size_t>> index; // [n][k], ascending distance
    std::vector<std::vector<double>> dist;       // [n][k]

    std::size_t k() const { return index.empty() ? 0 : index.front().size(); }
};

// Requires 1 <= k < n (BadHyperparameter otherwise).
knn_table build_knn(const matrix& X, std::size_t k, metric_kind m, double p = 2.0);

// Feature-wise min-max to [0,1]; constant features collapse to 0.
matrix minmax_normalize(const matrix& X);

} // namespace uoms::detectors
