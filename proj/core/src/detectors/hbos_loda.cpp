#include <algorithm>
#include <cmath>

#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"
#include "uoms/rng.hpp"

namespace uoms::detectors {
namespace {

constexpr double hbos_alpha = 0.1;

struct histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> prob; // probability mass per bin

    void fit(std::span<const double> values, std::size_t n_bins) {
        lo = values[0];
        hi = values[0];
        for (double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        prob.assign(n_bins, 0.0);
        const double inc = 1.0 / static_cast<double>(values.size());
        for (double v : values) prob[bin_of(v)] += inc;
    }

    std::size_t bin_of(double v) const {
        const double span = hi - lo;
        if (span <= 0.0) return 0;
        const auto b = static_cast<std::ptrdiff_t>((v - lo) / span *
                                                   static_cast<double>(prob.size()));
        return static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(b, 0, static_cast<std::ptrdiff_t>(prob.size()) - 1));
    }

    // In-range values read their bin mass. Out-of-range values (possible
    // only for points unseen at fit time) keep the edge-bin mass scaled
    // linearly down to zero across `tolerance` bin-widths.
    double mass(double v, double tolerance) const {
        if (v >= lo && v <= hi) return prob[bin_of(v)];
        const double width = (hi - lo) / static_cast<double>(prob.size());
        const double slack = width * tolerance;
        if (slack <= 0.0) return 0.0;
        if (v < lo) {
            const double dist = lo - v;
            return dist <= slack ? prob.front() * (1.0 - dist / slack) : 0.0;
        }
        const double dist = v - hi;
        return dist <= slack ? prob.back() * (1.0 - dist / slack) : 0.0;
    }
};

} // namespace

std::vector<double> hbos_score(const matrix& X, std::size_t n_bins, double tolerance) {
    if (n_bins < 2) fail(errc::bad_hyperparameter, "n_histograms must be >= 2");
    if (tolerance < 0.0) fail(errc::bad_hyperparameter, "tolerance must be >= 0");
    const matrix Z = minmax_normalize(X);
    const std::size_t n = Z.rows();
    const std::size_t d = Z.cols();

    std::vector<histogram> hists(d);
    std::vector<double> col(n);
    for (std::size_t f = 0; f < d; ++f) {
        for (std::size_t i = 0; i < n; ++i) col[i] = Z(i, f);
        hists[f].fit(col, n_bins);
    }

    std::vector<double> scores(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t f = 0; f < d; ++f) {
            s -= std::log2(hists[f].mass(Z(i, f), tolerance) + hbos_alpha);
        }
        scores[i] = s;
    }
    return scores;
}

std::vector<double> loda_score_with_projections(const matrix& X, std::size_t n_bins,
                                                const std::vector<std::vector<double>>& w) {
    if (n_bins < 2) fail(errc::bad_hyperparameter, "n_bins must be >= 2");
    if (w.empty()) fail(errc::bad_hyperparameter, "need at least one projection");
    const matrix Z = minmax_normalize(X);
    const std::size_t n = Z.rows();
    const std::size_t d = Z.cols();

    std::vector<double> scores(n, 0.0);
    std::vector<double> z(n);
    histogram hist;
    for (const auto& proj : w) {
        if (proj.size() != d) fail(errc::shape_mismatch, "projection length != n_features");
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t f = 0; f < d; ++f) acc += Z(i, f) * proj[f];
            z[i] = acc;
        }
        hist.fit(z, n_bins);
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] += -std::log(hist.prob[hist.bin_of(z[i])] + 1e-12);
        }
    }
    for (double& s : scores) s /= static_cast<double>(w.size());
    return scores;
}

std::vector<double> loda_score(const matrix& X, std::size_t n_bins, std::size_t n_random_cuts,
                               std::uint64_t seed) {
    if (n_random_cuts < 1) fail(errc::bad_hyperparameter, "n_random_cuts must be >= 1");
    const std::size_t d = X.cols();
    const std::size_t nnz = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d)))));

    rng r(seed);
    std::vector<std::vector<double>> projections(n_random_cuts);
    for (auto& proj : projections) {
        proj.assign(d, 0.0);
        for (std::size_t f : r.sample_without_replacement(d, nnz)) proj[f] = r.gauss();
    }
    return loda_score_with_projections(X, n_bins, projections);
}

} // namespace uoms::detectors
