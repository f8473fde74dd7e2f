#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uoms/matrix.hpp"

namespace uoms::standalone {

// Gaussian unification of a score column into [0,1] probability weights:
// w_j = max(0, erf((s_j - mu) / (sigma * sqrt(2)))). Pushes inlier scores
// toward zero. A zero-variance column yields all-zero weights (degenerate).
std::vector<double> kriegel_weights(std::span<const double> scores);

enum class separability_mode { kernel_classifier, knn_distance };

struct ireos_config {
    std::size_t n_gamma = 10;
    double gamma_max = 0.0; // <= 0: derive from the pairwise-distance heuristic
    std::size_t clump_size = 10;
    double tol = 5e-3;
    std::size_t sampling = 100; // pairs probed by the gamma_max heuristic
    std::size_t max_iterations = 500;
    separability_mode mode = separability_mode::kernel_classifier;
    std::uint64_t seed = 1;

    void validate() const;
};

// Separability of sample j at kernel bandwidth gamma: an RBF-kernel
// logistic regression separates x_j (positive) from all samples outside
// its clump (the clump_size-1 nearest neighbors are excluded as
// don't-cares); returns the fitted probability at x_j. Throws
// SeparabilityFailure when gradient descent does not converge within the
// iteration budget. knn_distance mode instead returns
// 1 - exp(-gamma * d^2) with d the distance to the clump_size-th
// neighbor; monotone in both gamma and isolation.
double separability(const matrix& X, std::size_t j, double gamma, std::size_t clump_size,
                    separability_mode mode = separability_mode::kernel_classifier,
                    double tol = 5e-3, std::size_t max_iterations = 500);

// Per-sample separability at every gamma on the grid; shared by all models
// on a dataset (Eq. depends on the model only through the weights).
struct ireos_profile {
    std::vector<double> gammas;
    matrix p;                  // n_samples x n_gamma
    std::vector<bool> skipped; // samples whose classifier failed to converge
};

ireos_profile compute_ireos_profile(const matrix& X, const ireos_config& config);

// gamma grid upper end: probes `sampling` random pairs and resolves the
// 5th-percentile pairwise distance, gamma_max = 1 / d^2.
double find_gamma_max_by_distances(const matrix& X, std::size_t sampling, std::uint64_t seed);

struct ireos_result {
    double value = 0.0;
    std::size_t skipped = 0;
};

// Weighted average of separability over the gamma grid; weights from
// kriegel_weights. Throws DegenerateModel when all weights vanish.
ireos_result ireos_from_profile(const ireos_profile& profile, std::span<const double> weights);

ireos_result ireos(const matrix& X, std::span<const double> scores, const ireos_config& config);

} // namespace uoms::standalone
