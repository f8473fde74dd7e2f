#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "uoms/matrix.hpp"
#include "uoms/rng.hpp"

namespace uoms::standalone {

struct curve_result {
    double area = 0.0;
    bool degenerate = false; // constant scores: not selectable
};

// Mass-Volume area (lower-better). Input scores follow the pool contract
// (higher = more anomalous); they are negated internally because the
// level-set convention treats low scores as abnormal, then min-max
// normalized. For each alpha on the grid the curve value is the score
// range |s_max - u| above the empirical alpha-mass threshold u; the area
// is the SUM of curve values across the grid.
curve_result mass_volume(std::span<const double> scores, std::size_t alpha_grid = 1000,
                         double alpha_min = 0.9, double alpha_max = 0.999);

// Excess-Mass area (higher-better): EM(t) = max over observed thresholds u
// of P_n(s >= u) - t * |s_max - u|, averaged over a uniform t grid on
// [0, t_star] where t_star = inf{t : EM(t) <= 0.9}.
curve_result excess_mass(std::span<const double> scores, std::size_t t_grid = 1000);

// Pointwise EM(t) on the same negated/normalized scale; EM(0) = 1.
std::vector<double> excess_mass_curve(std::span<const double> scores,
                                      std::span<const double> t_values);

// Monte-Carlo flavor of the same curves: the Lebesgue term is estimated by
// scoring `n_generated` uniform points from the data bounding box through
// the model. `scorer` must return pool-oriented scores for arbitrary rows.
using scorer_fn = std::function<std::vector<double>(const matrix&)>;

curve_result mass_volume_mc(std::span<const double> data_scores, const matrix& X,
                            const scorer_fn& scorer, std::size_t n_generated, rng& r,
                            std::size_t alpha_grid = 1000, double alpha_min = 0.9,
                            double alpha_max = 0.999);

curve_result excess_mass_mc(std::span<const double> data_scores, const matrix& X,
                            const scorer_fn& scorer, std::size_t n_generated, rng& r,
                            std::size_t t_grid = 1000);

} // namespace uoms::standalone
