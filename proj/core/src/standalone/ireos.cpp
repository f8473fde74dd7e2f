#include "uoms/standalone/ireos.hpp"

#include <algorithm>
#include <cmath>

#include "uoms/detectors/neighbors.hpp"
#include "uoms/error.hpp"
#include "uoms/rng.hpp"

namespace uoms::standalone {
namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

constexpr double ridge = 1e-4;

// RBF-kernel logistic regression, one positive vs the rest. Gradient
// descent with Armijo backtracking and a doubling warm start; converged
// when the sup-norm of the (sum-form) gradient drops below tol.
double fit_one_vs_rest(const matrix& X, std::size_t j,
                       const std::vector<std::size_t>& included, double gamma, double tol,
                       std::size_t max_iterations) {
    const std::size_t n = included.size();
    const std::size_t d = X.cols();

    matrix K(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            double sq = 0.0;
            for (std::size_t f = 0; f < d; ++f) {
                const double diff = X(included[a], f) - X(included[b], f);
                sq += diff * diff;
            }
            K(a, b) = std::exp(-gamma * sq);
        }
    }

    std::size_t pos = 0;
    while (included[pos] != j) ++pos;

    std::vector<double> alpha(n, 0.0), f_val(n), p(n), grad(n);
    std::vector<double> trial_alpha(n), trial_f(n);
    double bias = 0.0;

    const auto forward = [&](const std::vector<double>& a_vec, double b,
                             std::vector<double>& f_out) {
        double loss = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            double f = b;
            for (std::size_t q = 0; q < n; ++q) f += K(a, q) * a_vec[q];
            f_out[a] = f;
            const double y = a == pos ? 1.0 : 0.0;
            // log(1 + e^f) - y f, stably
            loss += (f > 0.0 ? f + std::log1p(std::exp(-f)) : std::log1p(std::exp(f))) -
                    y * f;
        }
        double sq = 0.0;
        for (double v : a_vec) sq += v * v;
        return loss + 0.5 * ridge * sq;
    };

    double loss = forward(alpha, bias, f_val);
    double step = 1.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        for (std::size_t a = 0; a < n; ++a) p[a] = sigmoid(f_val[a]);
        double grad_bias = 0.0, grad_max = 0.0, grad_sq = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            const double resid = p[a] - (a == pos ? 1.0 : 0.0);
            grad_bias += resid;
            double g = ridge * alpha[a];
            for (std::size_t b = 0; b < n; ++b) g += K(b, a) * (p[b] - (b == pos ? 1.0 : 0.0));
            grad[a] = g;
            grad_max = std::max(grad_max, std::fabs(g));
            grad_sq += g * g;
        }
        grad_max = std::max(grad_max, std::fabs(grad_bias));
        grad_sq += grad_bias * grad_bias;
        if (grad_max < tol) return p[pos];

        step = std::min(step * 2.0, 1e6);
        bool moved = false;
        while (step > 1e-12) {
            for (std::size_t a = 0; a < n; ++a) trial_alpha[a] = alpha[a] - step * grad[a];
            const double trial_bias = bias - step * grad_bias;
            const double trial_loss = forward(trial_alpha, trial_bias, trial_f);
            if (trial_loss <= loss - 0.5 * step * grad_sq) {
                alpha.swap(trial_alpha);
                bias = trial_bias;
                f_val.swap(trial_f);
                loss = trial_loss;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) {
            return p[pos]; // stalled at numerical precision: accept the iterate
        }
    }
    fail(errc::separability_failure,
         "classifier for sample " + std::to_string(j) + " did not converge");
}

std::vector<std::size_t> included_points(const matrix& X, std::size_t j,
                                         std::size_t clump_size) {
    const std::size_t n = X.rows();
    std::vector<std::size_t> excluded;
    const std::size_t k = std::min(clump_size > 0 ? clump_size - 1 : 0, n - 2);
    if (k > 0) {
        const detectors::knn_table t = detectors::build_knn(X, k, detectors::metric_kind::euclidean);
        excluded = t.index[j];
        std::sort(excluded.begin(), excluded.end());
    }
    std::vector<std::size_t> included;
    included.reserve(n - excluded.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(excluded.begin(), excluded.end(), i)) included.push_back(i);
    }
    return included;
}

double clump_distance(const matrix& X, std::size_t j, std::size_t clump_size) {
    const std::size_t n = X.rows();
    const std::size_t k = std::clamp<std::size_t>(clump_size, 1, n - 1);
    std::vector<double> dists;
    dists.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        dists.push_back(
            detectors::point_distance(X.row(i), X.row(j), detectors::metric_kind::euclidean));
    }
    std::nth_element(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     dists.end());
    return dists[k - 1];
}

} // namespace

std::vector<double> kriegel_weights(std::span<const double> scores) {
    const std::size_t n = scores.size();
    if (n == 0) fail(errc::empty_input, "no scores");
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double s : scores) var += (s - mean) * (s - mean);
    var /= static_cast<double>(n);
    const double sigma = std::sqrt(var);

    std::vector<double> w(n, 0.0);
    if (sigma == 0.0) return w;
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = std::max(0.0, std::erf((scores[j] - mean) / (sigma * std::sqrt(2.0))));
    }
    return w;
}

void ireos_config::validate() const {
    if (n_gamma < 1) fail(errc::config_error, "n_gamma must be >= 1");
    if (tol <= 0.0) fail(errc::config_error, "tol must be > 0");
    if (clump_size < 1) fail(errc::config_error, "clump_size must be >= 1");
}

double separability(const matrix& X, std::size_t j, double gamma, std::size_t clump_size,
                    separability_mode mode, double tol, std::size_t max_iterations) {
    if (gamma <= 0.0) fail(errc::config_error, "gamma must be > 0");
    if (mode == separability_mode::knn_distance) {
        const double d = clump_distance(X, j, clump_size);
        return 1.0 - std::exp(-gamma * d * d);
    }
    return fit_one_vs_rest(X, j, included_points(X, j, clump_size), gamma, tol,
                           max_iterations);
}

double find_gamma_max_by_distances(const matrix& X, std::size_t sampling, std::uint64_t seed) {
    const std::size_t n = X.rows();
    rng r(seed);
    std::vector<double> dists;
    dists.reserve(sampling);
    for (std::size_t s = 0; s < sampling; ++s) {
        const std::size_t a = static_cast<std::size_t>(r.below(n));
        std::size_t b = static_cast<std::size_t>(r.below(n));
        if (b == a) b = (b + 1) % n;
        const double d =
            detectors::point_distance(X.row(a), X.row(b), detectors::metric_kind::euclidean);
        if (d > 0.0) dists.push_back(d);
    }
    if (dists.empty()) fail(errc::numerical_failure, "all sampled point pairs coincide");
    std::sort(dists.begin(), dists.end());
    // resolve the 5th-percentile pairwise scale
    const double d_low = dists[std::min(dists.size() - 1, dists.size() / 20)];
    return 1.0 / (d_low * d_low);
}

ireos_profile compute_ireos_profile(const matrix& X, const ireos_config& config) {
    config.validate();
    const std::size_t n = X.rows();
    if (n < 3) fail(errc::not_enough_data, "ireos needs at least 3 samples");

    const double gamma_max = config.gamma_max > 0.0
                                 ? config.gamma_max
                                 : find_gamma_max_by_distances(X, config.sampling, config.seed);

    ireos_profile profile;
    profile.gammas.resize(config.n_gamma);
    for (std::size_t l = 0; l < config.n_gamma; ++l) {
        profile.gammas[l] =
            gamma_max * static_cast<double>(l + 1) / static_cast<double>(config.n_gamma);
    }
    profile.p = matrix(n, config.n_gamma);
    profile.skipped.assign(n, false);

    if (config.mode == separability_mode::knn_distance) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = clump_distance(X, j, config.clump_size);
            for (std::size_t l = 0; l < config.n_gamma; ++l) {
                profile.p(j, l) = 1.0 - std::exp(-profile.gammas[l] * d * d);
            }
        }
        return profile;
    }

    for (std::size_t j = 0; j < n; ++j) {
        const auto included = included_points(X, j, config.clump_size);
        for (std::size_t l = 0; l < config.n_gamma; ++l) {
            try {
                profile.p(j, l) = fit_one_vs_rest(X, j, included, profile.gammas[l],
                                                  config.tol, config.max_iterations);
            } catch (const error& e) {
                if (e.code() != errc::separability_failure) throw;
                profile.skipped[j] = true;
                break;
            }
        }
    }
    return profile;
}

ireos_result ireos_from_profile(const ireos_profile& profile, std::span<const double> weights) {
    const std::size_t n = profile.p.rows();
    if (weights.size() != n) fail(errc::shape_mismatch, "weights length != sample count");

    double weight_sum = 0.0;
    std::size_t skipped = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (profile.skipped[j]) {
            ++skipped;
            continue;
        }
        weight_sum += weights[j];
    }
    if (weight_sum <= 0.0) {
        fail(errc::degenerate_model, "all probability weights vanish");
    }

    double total = 0.0;
    for (std::size_t l = 0; l < profile.gammas.size(); ++l) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (profile.skipped[j]) continue;
            acc += profile.p(j, l) * weights[j];
        }
        total += acc / weight_sum;
    }
    return {total / static_cast<double>(profile.gammas.size()), skipped};
}

ireos_result ireos(const matrix& X, std::span<const double> scores,
                   const ireos_config& config) {
    const ireos_profile profile = compute_ireos_profile(X, config);
    return ireos_from_profile(profile, kriegel_weights(scores));
}

} // namespace uoms::standalone
