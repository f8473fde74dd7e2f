#include "uoms/eval/perf_table.hpp"

#include <algorithm>
#include <cmath>

#include "uoms/detectors/model_spec.hpp"
#include "uoms/error.hpp"

namespace uoms::eval {

void perf_table::validate() const {
    if (values.rows() != datasets.size() || values.cols() != methods.size()) {
        fail(errc::shape_mismatch, "perf table shape does not match its labels");
    }
    for (double v : values.flat()) {
        if (!(v >= 0.0 && v <= 1.0)) {
            fail(errc::format_error, "perf values must lie in [0,1]");
        }
    }
}

std::size_t perf_table::method_index(const std::string& name) const {
    for (std::size_t m = 0; m < methods.size(); ++m) {
        if (methods[m] == name) return m;
    }
    fail(errc::config_error, "method '" + name + "' not in table");
}

std::vector<double> perf_table::column(std::size_t m) const {
    std::vector<double> col(datasets.size());
    for (std::size_t t = 0; t < datasets.size(); ++t) col[t] = values(t, m);
    return col;
}

matrix pairwise_comparison(const perf_table& table) {
    const std::size_t m = table.methods.size();
    matrix p(m, m, 1.0);
    for (std::size_t r = 0; r < m; ++r) {
        const auto row_col = table.column(r);
        for (std::size_t c = 0; c < m; ++c) {
            if (c == r) continue;
            p(r, c) = wilcoxon_one_sided(row_col, table.column(c)).p;
        }
    }
    return p;
}

std::vector<double> baseline_random(const perf_table& model_perf) {
    if (model_perf.methods.empty()) fail(errc::config_error, "empty model pool");
    std::vector<double> out(model_perf.datasets.size(), 0.0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        double acc = 0.0;
        for (std::size_t m = 0; m < model_perf.methods.size(); ++m) {
            acc += model_perf.values(t, m);
        }
        out[t] = acc / static_cast<double>(model_perf.methods.size());
    }
    return out;
}

std::vector<double> baseline_family(const perf_table& model_perf, const std::string& family) {
    std::vector<std::size_t> members;
    for (std::size_t m = 0; m < model_perf.methods.size(); ++m) {
        if (detectors::family_of_model_id(model_perf.methods[m]) == family) {
            members.push_back(m);
        }
    }
    if (members.empty()) fail(errc::config_error, "family '" + family + "' has no models");
    std::vector<double> out(model_perf.datasets.size(), 0.0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        double acc = 0.0;
        for (std::size_t m : members) acc += model_perf.values(t, m);
        out[t] = acc / static_cast<double>(members.size());
    }
    return out;
}

std::vector<double> weighted_family_mean(const perf_table& family_perf,
                                         const std::map<std::string, std::size_t>& weights) {
    double total = 0.0;
    std::vector<double> w(family_perf.methods.size(), 0.0);
    for (std::size_t m = 0; m < family_perf.methods.size(); ++m) {
        const auto it = weights.find(family_perf.methods[m]);
        if (it == weights.end()) {
            fail(errc::config_error,
                 "no pool weight for family '" + family_perf.methods[m] + "'");
        }
        w[m] = static_cast<double>(it->second);
        total += w[m];
    }
    if (total <= 0.0) fail(errc::config_error, "zero total family weight");

    std::vector<double> out(family_perf.datasets.size(), 0.0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        double acc = 0.0;
        for (std::size_t m = 0; m < family_perf.methods.size(); ++m) {
            acc += family_perf.values(t, m) * w[m];
        }
        out[t] = acc / total;
    }
    return out;
}

std::size_t smallest_q(std::span<const double> selected_per_dataset,
                       const std::vector<std::vector<double>>& sorted_model_perf,
                       double alpha) {
    if (sorted_model_perf.size() != selected_per_dataset.size() || sorted_model_perf.empty()) {
        fail(errc::shape_mismatch, "per-dataset inputs disagree");
    }
    std::size_t pool = sorted_model_perf.front().size();
    for (const auto& row : sorted_model_perf) pool = std::min(pool, row.size());
    if (pool == 0) fail(errc::not_enough_data, "no model performances");

    std::vector<double> qth(selected_per_dataset.size());
    for (std::size_t q = 1; q <= pool; ++q) {
        for (std::size_t t = 0; t < qth.size(); ++t) qth[t] = sorted_model_perf[t][q - 1];
        if (wilcoxon_one_sided(qth, selected_per_dataset).p > alpha) return q;
    }
    return pool;
}

method_summary summarize_method(const std::string& name,
                                std::span<const double> per_dataset,
                                std::span<const double> random_baseline,
                                std::span<const double> iforest_baseline,
                                const std::vector<std::vector<double>>& sorted_model_perf) {
    method_summary s;
    s.method = name;
    s.p_vs_random = wilcoxon_one_sided(per_dataset, random_baseline).p;
    s.p_vs_iforest = wilcoxon_one_sided(per_dataset, iforest_baseline).p;
    s.q = smallest_q(per_dataset, sorted_model_perf);

    double mean = 0.0;
    for (double v : per_dataset) mean += v;
    mean /= static_cast<double>(per_dataset.size());
    double var = 0.0;
    for (double v : per_dataset) var += (v - mean) * (v - mean);
    // sample standard deviation across datasets
    var = per_dataset.size() > 1 ? var / static_cast<double>(per_dataset.size() - 1) : 0.0;
    s.mean = mean;
    s.stddev = std::sqrt(var);
    return s;
}

} // namespace uoms::eval
