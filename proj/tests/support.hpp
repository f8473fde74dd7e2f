// Shared synthetic data builders for the unit and acceptance suites.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "uoms/dataset.hpp"
#include "uoms/matrix.hpp"
#include "uoms/rng.hpp"
#include "uoms/score_matrix.hpp"

namespace support {

// Standard-normal blob with planted extreme outliers. Half the outliers
// are lone points at radius [r_lo, r_hi]; the rest arrive in tight pairs,
// which defeats the k=1 neighbor models and keeps the pool honest.
inline uoms::dataset_bundle planted_blob(std::size_t n, std::size_t d, std::size_t n_out,
                                         std::uint64_t seed, double r_lo = 6.0,
                                         double r_hi = 10.0) {
    uoms::rng r(seed);
    uoms::dataset_bundle ds;
    ds.name = "blob_" + std::to_string(seed);
    ds.X = uoms::matrix(n, d);
    ds.labels.emplace(n, 0);
    ds.n_outliers = n_out;

    for (std::size_t i = 0; i < n - n_out; ++i) {
        for (std::size_t f = 0; f < d; ++f) ds.X(i, f) = r.gauss();
    }

    const auto place_at_radius = [&](std::size_t row, double radius,
                                     const std::vector<double>& dir) {
        for (std::size_t f = 0; f < d; ++f) ds.X(row, f) = radius * dir[f];
    };
    const auto random_direction = [&] {
        std::vector<double> dir(d);
        double norm = 0.0;
        for (double& v : dir) {
            v = r.gauss();
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (double& v : dir) v /= norm > 0.0 ? norm : 1.0;
        return dir;
    };

    std::size_t row = n - n_out;
    std::size_t placed = 0;
    while (placed < n_out) {
        const auto dir = random_direction();
        const double radius = r.uniform(r_lo, r_hi);
        place_at_radius(row, radius, dir);
        (*ds.labels)[row] = 1;
        ++row;
        ++placed;
        if (placed < n_out && placed % 2 == 1) { // twin close to the previous outlier
            for (std::size_t f = 0; f < d; ++f) {
                ds.X(row, f) = ds.X(row - 1, f) + 0.05 * r.gauss();
            }
            (*ds.labels)[row] = 1;
            ++row;
            ++placed;
        }
    }
    ds.validate();
    return ds;
}

inline uoms::score_matrix random_score_matrix(std::size_t n_samples, std::size_t n_models,
                                              std::uint64_t seed,
                                              const std::string& dataset_id = "synthetic") {
    uoms::rng r(seed);
    uoms::score_matrix m(dataset_id, n_samples);
    std::vector<double> col(n_samples);
    for (std::size_t i = 0; i < n_models; ++i) {
        for (double& v : col) v = r.uniform();
        m.add_column("knn|n_neighbors=" + std::to_string(i + 1) + "|method=mean", col);
    }
    return m;
}

// strictly increasing piecewise map built from random positive gaps; ties
// and order are preserved exactly, nothing else is
inline std::vector<double> random_monotone_transform(std::span<const double> column,
                                                     uoms::rng& r) {
    std::vector<double> sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<double> mapped(sorted.size());
    double level = r.uniform(-5.0, 5.0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        level += 1e-6 + 3.0 * r.uniform();
        mapped[i] = level;
    }
    std::vector<double> out(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), column[i]);
        out[i] = mapped[static_cast<std::size_t>(it - sorted.begin())];
    }
    return out;
}

} // namespace support
