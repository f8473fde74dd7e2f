#include "uoms/standalone/mass_volume.hpp"

#include <algorithm>
#include <cmath>

#include "uoms/error.hpp"
#include "uoms/ranking.hpp"

namespace uoms::standalone {
namespace {

// negate to the level-set convention (lower = more abnormal), then min-max
// normalize; empty result signals a constant column
std::vector<double> negate_normalize(std::span<const double> scores) {
    if (scores.empty()) fail(errc::empty_input, "no scores");
    if (is_constant_column(scores)) return {};
    double lo = -scores[0], hi = -scores[0];
    std::vector<double> v(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        v[i] = -scores[i];
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    for (double& x : v) x = (x - lo) / (hi - lo);
    return v;
}

struct threshold_table {
    std::vector<double> u;    // distinct observed values, ascending
    std::vector<double> mass; // P_n(v >= u)
};

threshold_table build_thresholds(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    threshold_table t;
    const std::size_t n = v.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[j + 1] == v[i]) ++j;
        t.u.push_back(v[i]);
        t.mass.push_back(static_cast<double>(n - i) / static_cast<double>(n));
        i = j + 1;
    }
    return t;
}

// largest observed value u with P_n(v >= u) >= alpha
double alpha_threshold(const std::vector<double>& sorted, double alpha) {
    const std::size_t n = sorted.size();
    auto need = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n)));
    need = std::clamp<std::size_t>(need, 1, n);
    return sorted[n - need];
}

curve_result em_area_from(const threshold_table& t, const std::vector<double>& leb,
                          std::size_t t_grid) {
    const auto em_at = [&](double tt) {
        double best = 0.0;
        for (std::size_t i = 0; i < t.u.size(); ++i) {
            best = std::max(best, t.mass[i] - tt * leb[i]);
        }
        return best;
    };

    // EM^{-1}(0.9): smallest t where the whole line envelope drops to 0.9
    double t_star = 0.0;
    bool bounded = false;
    for (std::size_t i = 0; i < t.u.size(); ++i) {
        if (leb[i] > 0.0) {
            t_star = std::max(t_star, (t.mass[i] - 0.9) / leb[i]);
            bounded = true;
        } else if (t.mass[i] > 0.9) {
            bounded = false; // EM(t) never reaches 0.9
            break;
        }
    }
    if (!bounded || t_star <= 0.0) return {0.0, true};

    double area = 0.0;
    for (std::size_t j = 0; j < t_grid; ++j) {
        const double tt =
            t_star * static_cast<double>(j) / static_cast<double>(t_grid - 1);
        area += em_at(tt);
    }
    return {area / static_cast<double>(t_grid), false};
}

matrix uniform_box_sample(const matrix& X, std::size_t n_generated, rng& r, double& volume) {
    const std::size_t d = X.cols();
    std::vector<double> lo(d), hi(d);
    for (std::size_t f = 0; f < d; ++f) {
        lo[f] = hi[f] = X(0, f);
        for (std::size_t i = 1; i < X.rows(); ++i) {
            lo[f] = std::min(lo[f], X(i, f));
            hi[f] = std::max(hi[f], X(i, f));
        }
    }
    volume = 1.0;
    for (std::size_t f = 0; f < d; ++f) {
        if (hi[f] > lo[f]) volume *= hi[f] - lo[f];
    }
    matrix U(n_generated, d);
    for (std::size_t i = 0; i < n_generated; ++i) {
        for (std::size_t f = 0; f < d; ++f) U(i, f) = r.uniform(lo[f], hi[f]);
    }
    return U;
}

} // namespace

curve_result mass_volume(std::span<const double> scores, std::size_t alpha_grid,
                         double alpha_min, double alpha_max) {
    std::vector<double> v = negate_normalize(scores);
    if (v.empty()) return {0.0, true};
    std::sort(v.begin(), v.end());
    const double v_max = v.back();

    double area = 0.0;
    for (std::size_t j = 0; j < alpha_grid; ++j) {
        const double alpha = alpha_min + (alpha_max - alpha_min) * static_cast<double>(j) /
                                             static_cast<double>(alpha_grid - 1);
        area += v_max - alpha_threshold(v, alpha);
    }
    return {area, false};
}

curve_result excess_mass(std::span<const double> scores, std::size_t t_grid) {
    std::vector<double> v = negate_normalize(scores);
    if (v.empty()) return {0.0, true};
    const threshold_table t = build_thresholds(std::move(v));

    std::vector<double> leb(t.u.size());
    const double v_max = t.u.back();
    for (std::size_t i = 0; i < t.u.size(); ++i) leb[i] = v_max - t.u[i];
    return em_area_from(t, leb, t_grid);
}

std::vector<double> excess_mass_curve(std::span<const double> scores,
                                      std::span<const double> t_values) {
    std::vector<double> v = negate_normalize(scores);
    if (v.empty()) fail(errc::degenerate_ranking, "constant scores have no EM curve");
    const threshold_table t = build_thresholds(std::move(v));
    const double v_max = t.u.back();

    std::vector<double> out(t_values.size());
    for (std::size_t j = 0; j < t_values.size(); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < t.u.size(); ++i) {
            best = std::max(best, t.mass[i] - t_values[j] * (v_max - t.u[i]));
        }
        out[j] = best;
    }
    return out;
}

curve_result mass_volume_mc(std::span<const double> data_scores, const matrix& X,
                            const scorer_fn& scorer, std::size_t n_generated, rng& r,
                            std::size_t alpha_grid, double alpha_min, double alpha_max) {
    if (is_constant_column(data_scores)) return {0.0, true};
    double volume = 0.0;
    const matrix U = uniform_box_sample(X, n_generated, r, volume);
    std::vector<double> unif = scorer(U);
    for (double& s : unif) s = -s;
    std::sort(unif.begin(), unif.end());

    std::vector<double> v(data_scores.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -data_scores[i];
    std::sort(v.begin(), v.end());

    double area = 0.0;
    for (std::size_t j = 0; j < alpha_grid; ++j) {
        const double alpha = alpha_min + (alpha_max - alpha_min) * static_cast<double>(j) /
                                             static_cast<double>(alpha_grid - 1);
        const double u = alpha_threshold(v, alpha);
        const auto it = std::lower_bound(unif.begin(), unif.end(), u);
        const double frac = static_cast<double>(unif.end() - it) /
                            static_cast<double>(unif.size());
        area += volume * frac;
    }
    return {area, false};
}

curve_result excess_mass_mc(std::span<const double> data_scores, const matrix& X,
                            const scorer_fn& scorer, std::size_t n_generated, rng& r,
                            std::size_t t_grid) {
    if (is_constant_column(data_scores)) return {0.0, true};
    double volume = 0.0;
    const matrix U = uniform_box_sample(X, n_generated, r, volume);
    std::vector<double> unif = scorer(U);
    for (double& s : unif) s = -s;
    std::sort(unif.begin(), unif.end());

    std::vector<double> v(data_scores.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -data_scores[i];
    const threshold_table t = build_thresholds(std::move(v));

    std::vector<double> leb(t.u.size());
    for (std::size_t i = 0; i < t.u.size(); ++i) {
        const auto it = std::lower_bound(unif.begin(), unif.end(), t.u[i]);
        leb[i] = volume * static_cast<double>(unif.end() - it) /
                 static_cast<double>(unif.size());
    }
    return em_area_from(t, leb, t_grid);
}

} // namespace uoms::standalone
