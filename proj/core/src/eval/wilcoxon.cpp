#include "uoms/eval/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "uoms/error.hpp"
#include "uoms/ranking.hpp"

namespace uoms::eval {
namespace {

// exact tail over all 2^n sign assignments via the rank-sum counting
// polynomial; doubled ranks are integers even under fractional ties
double exact_tail(const std::vector<double>& ranks, double w_obs) {
    std::vector<std::uint32_t> doubled(ranks.size());
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        doubled[i] = static_cast<std::uint32_t>(std::llround(2.0 * ranks[i]));
        total += doubled[i];
    }
    std::vector<std::uint64_t> count(total + 1, 0);
    count[0] = 1;
    for (std::uint32_t r : doubled) {
        for (std::uint32_t s = total; s >= r; --s) {
            count[s] += count[s - r];
        }
    }
    const auto threshold =
        static_cast<std::uint32_t>(std::llround(2.0 * w_obs));
    std::uint64_t tail = 0;
    for (std::uint32_t s = threshold; s <= total; ++s) tail += count[s];
    return static_cast<double>(tail) /
           std::pow(2.0, static_cast<double>(ranks.size()));
}

double normal_tail(const std::vector<double>& ranks, double w_obs) {
    const double n = static_cast<double>(ranks.size());
    const double mean = n * (n + 1.0) / 4.0;

    // tie correction: sum of (t^3 - t) over rank tie groups
    std::vector<double> sorted(ranks);
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
    if (var <= 0.0) return 1.0;
    const double z = (w_obs - mean - 0.5) / std::sqrt(var);
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

wilcoxon_result wilcoxon_one_sided(std::span<const double> a, std::span<const double> b,
                                   std::size_t exact_limit) {
    if (a.size() != b.size()) fail(errc::shape_mismatch, "paired vectors differ in length");
    if (a.empty()) fail(errc::empty_input, "no pairs");

    std::vector<double> abs_diff;
    std::vector<int> sign;
    abs_diff.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d == 0.0) continue; // classical zero exclusion
        abs_diff.push_back(std::fabs(d));
        sign.push_back(d > 0.0 ? 1 : -1);
    }

    wilcoxon_result result;
    result.n_effective = abs_diff.size();
    if (abs_diff.empty()) {
        result.no_signal = true;
        result.p = 1.0;
        return result;
    }

    // ascending fractional ranks of |d|
    std::vector<double> neg(abs_diff.size());
    for (std::size_t i = 0; i < abs_diff.size(); ++i) neg[i] = -abs_diff[i];
    const rank_vector ranks = to_rank_vector(neg);

    double w_plus = 0.0;
    for (std::size_t i = 0; i < abs_diff.size(); ++i) {
        if (sign[i] > 0) w_plus += ranks[i];
    }
    result.statistic = w_plus;

    result.p = abs_diff.size() <= exact_limit ? exact_tail(ranks.ranks, w_plus)
                                              : normal_tail(ranks.ranks, w_plus);
    return result;
}

} // namespace uoms::eval
