#pragma once

#include <map>
#include <string>
#include <vector>

#include "uoms/eval/wilcoxon.hpp"
#include "uoms/matrix.hpp"

namespace uoms::eval {

// Datasets x methods metric values in [0,1]; the unit consumed by the
// statistical harness. "Methods" may be selection strategies, individual
// pool models, or detector families depending on the table.
struct perf_table {
    std::vector<std::string> datasets;
    std::vector<std::string> methods;
    matrix values; // [datasets x methods]

    void validate() const;
    std::size_t method_index(const std::string& name) const; // throws ConfigError
    std::vector<double> column(std::size_t m) const;
};

// p[r][c] = one-sided Wilcoxon p for "row method > column method";
// diagonal entries are 1 (NoSignal).
matrix pairwise_comparison(const perf_table& table);

// Per-dataset mean over all columns of a per-model table: the expected
// performance of a uniformly random pool member.
std::vector<double> baseline_random(const perf_table& model_perf);

// Per-dataset mean over the columns whose model id belongs to `family`.
std::vector<double> baseline_family(const perf_table& model_perf, const std::string& family);

// Per-dataset weighted mean of family columns, weights = pool slots per
// family; reconstructs the Random baseline from a family-mean table.
std::vector<double> weighted_family_mean(const perf_table& family_perf,
                                         const std::map<std::string, std::size_t>& weights);

// Smallest q such that the q-th best model per dataset is no longer
// significantly better than the selection (one-sided p > alpha).
// sorted_model_perf holds each dataset's model performances descending.
std::size_t smallest_q(std::span<const double> selected_per_dataset,
                       const std::vector<std::vector<double>>& sorted_model_perf,
                       double alpha = 0.05);

struct method_summary {
    std::string method;
    double p_vs_random = 1.0;
    double p_vs_iforest = 1.0;
    std::size_t q = 0;
    double mean = 0.0;
    double stddev = 0.0;
};

method_summary summarize_method(const std::string& name,
                                std::span<const double> per_dataset,
                                std::span<const double> random_baseline,
                                std::span<const double> iforest_baseline,
                                const std::vector<std::vector<double>>& sorted_model_perf);

} // namespace uoms::eval
