#pragma once

#include <cstdint>
#include <vector>

#include "uoms/detectors/model_spec.hpp"
#include "uoms/detectors/neighbors.hpp"
#include "uoms/matrix.hpp"

namespace uoms::detectors {

// All scorers follow the pool orientation contract: higher score = more
// anomalous. Scoring is transductive (the training set scores itself),
// matching how the pool is consumed downstream.

// Aggregate of the distances to the k nearest neighbors: "largest" is the
// distance to the k-th neighbor, "mean"/"median" aggregate all k.
enum class knn_method { largest, mean, median };
std::vector<double> knn_score(const matrix& X, std::size_t k, knn_method method,
                              metric_kind metric = metric_kind::euclidean, double p = 2.0);

// Standard LOF. Zero-distance neighborhoods cap the local reachability
// density at 1e12 instead of dividing by zero.
std::vector<double> lof_score(const matrix& X, std::size_t k,
                              metric_kind metric = metric_kind::euclidean, double p = 2.0);

// Connectivity-based outlier factor: average chaining distance of the
// point against the mean chaining distance of its k-neighborhood.
std::vector<double> cof_score(const matrix& X, std::size_t k);

// Fast ABOD: population variance of the distance-weighted cosine over all
// neighbor pairs in the k-NN set, sign-flipped so higher = more anomalous.
// Pairs involving a zero-distance neighbor are skipped.
std::vector<double> abod_score(const matrix& X, std::size_t k);

// Isolation forest on subsamples of size min(256, n); each tree draws
// ceil(fraction * d) features. Deterministic given the seed.
std::vector<double> iforest_score(const matrix& X, std::size_t n_estimators,
                                  double max_features_fraction, std::uint64_t seed);

// Histogram-based outlier score over min-max normalized features, static
// equal-width bins, additive 0.1 smoothing, log2 densities. `tolerance`
// controls how far out-of-range values may fall before their bin
// probability decays to zero (only reachable when scoring new points).
std::vector<double> hbos_score(const matrix& X, std::size_t n_bins, double tolerance);

// LODA: mean negative log histogram density over sparse random 1-D
// projections with ceil(sqrt(d)) non-zeros each.
std::vector<double> loda_score(const matrix& X, std::size_t n_bins, std::size_t n_random_cuts,
                               std::uint64_t seed);
// Same scoring with caller-supplied projection vectors (one per cut).
std::vector<double> loda_score_with_projections(const matrix& X, std::size_t n_bins,
                                                const std::vector<std::vector<double>>& w);

// Dispatch one pool slot. Imported families (OCSVM) cannot be trained
// natively and raise ConfigError here.
std::vector<double> fit_score(const model_spec& spec, const matrix& X, double minkowski_p = 2.0);

} // namespace uoms::detectors
