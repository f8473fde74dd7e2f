#include "uoms/standalone/cluster_indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "uoms/error.hpp"
#include "uoms/standalone/score_split.hpp"

namespace uoms::standalone {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

struct split_stats {
    std::size_t n = 0, o = 0, m = 0;
    double c_o = 0.0, c_i = 0.0, mean = 0.0;
    double ss_o = 0.0, ss_i = 0.0; // within-cluster squared deviations
    double ssw = 0.0, ssb = 0.0, tss = 0.0;
    std::vector<double> z;                 // normalized scores
    std::vector<double> out_vals, in_vals; // sorted ascending per cluster
};

split_stats compute_stats(std::span<const double> scores, std::size_t o_t) {
    split_stats st;
    st.n = scores.size();

    st.z.resize(st.n);
    double lo = scores[0], hi = scores[0];
    for (double s : scores) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < st.n; ++i) {
        st.z[i] = span > 0.0 ? (scores[i] - lo) / span : 0.0;
    }

    const score_split split = split_by_top_k(st.z, o_t);
    st.o = split.outlier_idx.size();
    st.m = split.inlier_idx.size();
    st.c_o = split.outlier_center;
    st.c_i = split.inlier_center;
    st.mean = (st.c_o * static_cast<double>(st.o) + st.c_i * static_cast<double>(st.m)) /
              static_cast<double>(st.n);

    st.out_vals.reserve(st.o);
    st.in_vals.reserve(st.m);
    for (std::size_t i : split.outlier_idx) {
        const double d = st.z[i] - st.c_o;
        st.ss_o += d * d;
        st.out_vals.push_back(st.z[i]);
    }
    for (std::size_t i : split.inlier_idx) {
        const double d = st.z[i] - st.c_i;
        st.ss_i += d * d;
        st.in_vals.push_back(st.z[i]);
    }
    std::sort(st.out_vals.begin(), st.out_vals.end());
    std::sort(st.in_vals.begin(), st.in_vals.end());

    st.ssw = st.ss_o + st.ss_i;
    const double dso = st.c_o - st.mean;
    const double dsi = st.c_i - st.mean;
    st.ssb = static_cast<double>(st.o) * dso * dso + static_cast<double>(st.m) * dsi * dsi;
    st.tss = st.ssw + st.ssb;
    return st;
}

// sum over pairs (j < j') of |v_j - v_j'| for one sorted vector
double pairwise_abs_sum(const std::vector<double>& sorted) {
    double total = 0.0, prefix = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        total += sorted[k] * static_cast<double>(k) - prefix;
        prefix += sorted[k];
    }
    return total;
}

// sum over (a in A, b in B) of |a - b|; both sorted ascending
double cross_abs_sum(const std::vector<double>& A, const std::vector<double>& B) {
    std::vector<double> prefix(B.size() + 1, 0.0);
    for (std::size_t i = 0; i < B.size(); ++i) prefix[i + 1] = prefix[i] + B[i];
    double total = 0.0;
    for (double a : A) {
        const auto it = std::upper_bound(B.begin(), B.end(), a);
        const std::size_t le = static_cast<std::size_t>(it - B.begin());
        total += a * static_cast<double>(le) - prefix[le];
        total += (prefix[B.size()] - prefix[le]) - a * static_cast<double>(B.size() - le);
    }
    return total;
}

// mean |x - y| over members y of one sorted cluster, for each query x
double abs_sum_to(const std::vector<double>& sorted, const std::vector<double>& prefix,
                  double x) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    const std::size_t le = static_cast<std::size_t>(it - sorted.begin());
    return x * static_cast<double>(le) - prefix[le] +
           (prefix[sorted.size()] - prefix[le]) - x * static_cast<double>(sorted.size() - le);
}

double hubert_gamma(const split_stats& st) {
    const double n0 = 0.5 * static_cast<double>(st.n) * static_cast<double>(st.n - 1);
    if (n0 < 2.0) return -inf;

    std::vector<double> all(st.z);
    std::sort(all.begin(), all.end());
    const double sum_abs = pairwise_abs_sum(all);

    double sum = 0.0, sum_sq = 0.0;
    for (double v : st.z) {
        sum += v;
        sum_sq += v * v;
    }
    const double sum_sq_pairs = static_cast<double>(st.n) * sum_sq - sum * sum;

    const double cross = cross_abs_sum(st.out_vals, st.in_vals);
    const double cross_pairs = static_cast<double>(st.o) * static_cast<double>(st.m);

    const double mean_x = sum_abs / n0;
    const double mean_y = cross_pairs / n0;
    const double var_x = sum_sq_pairs / n0 - mean_x * mean_x;
    const double var_y = mean_y * (1.0 - mean_y);
    if (var_x <= 0.0 || var_y <= 0.0) return -inf;
    const double cov = cross / n0 - mean_x * mean_y;
    return cov / std::sqrt(var_x * var_y);
}

double silhouette(const split_stats& st) {
    std::vector<double> pre_o(st.o + 1, 0.0), pre_i(st.m + 1, 0.0);
    for (std::size_t k = 0; k < st.o; ++k) pre_o[k + 1] = pre_o[k] + st.out_vals[k];
    for (std::size_t k = 0; k < st.m; ++k) pre_i[k + 1] = pre_i[k] + st.in_vals[k];

    double total = 0.0;
    const auto add_cluster = [&](const std::vector<double>& own,
                                 const std::vector<double>& own_pre,
                                 const std::vector<double>& other,
                                 const std::vector<double>& other_pre) {
        for (double x : own) {
            double s = 0.0;
            if (own.size() > 1) {
                const double a =
                    abs_sum_to(own, own_pre, x) / static_cast<double>(own.size() - 1);
                const double b =
                    abs_sum_to(other, other_pre, x) / static_cast<double>(other.size());
                const double denom = std::max(a, b);
                s = denom > 0.0 ? (b - a) / denom : 0.0;
            }
            total += s;
        }
    };
    add_cluster(st.out_vals, pre_o, st.in_vals, pre_i);
    add_cluster(st.in_vals, pre_i, st.out_vals, pre_o);
    return total / static_cast<double>(st.n);
}

} // namespace

cluster_index_kind cluster_index_from_name(const std::string& name) {
    if (name == "xb") return cluster_index_kind::xb;
    if (name == "rs") return cluster_index_kind::rs;
    if (name == "ch") return cluster_index_kind::ch;
    if (name == "std") return cluster_index_kind::stddev;
    if (name == "h") return cluster_index_kind::hubert;
    if (name == "s") return cluster_index_kind::silhouette;
    if (name == "i") return cluster_index_kind::iidx;
    if (name == "db") return cluster_index_kind::db;
    if (name == "sd") return cluster_index_kind::sd;
    if (name == "d") return cluster_index_kind::dunn;
    fail(errc::config_error, "unknown cluster index '" + name + "'");
}

const char* cluster_index_name(cluster_index_kind kind) {
    switch (kind) {
    case cluster_index_kind::xb: return "xb";
    case cluster_index_kind::rs: return "rs";
    case cluster_index_kind::ch: return "ch";
    case cluster_index_kind::stddev: return "std";
    case cluster_index_kind::hubert: return "h";
    case cluster_index_kind::silhouette: return "s";
    case cluster_index_kind::iidx: return "i";
    case cluster_index_kind::db: return "db";
    case cluster_index_kind::sd: return "sd";
    case cluster_index_kind::dunn: return "d";
    }
    return "?";
}

orientation cluster_index_orientation(cluster_index_kind kind) {
    switch (kind) {
    case cluster_index_kind::xb:
    case cluster_index_kind::stddev:
    case cluster_index_kind::db:
    case cluster_index_kind::sd:
        return orientation::lower_better;
    default:
        return orientation::higher_better;
    }
}

index_value cluster_index(std::span<const double> scores, std::size_t o_t,
                          cluster_index_kind kind) {
    const orientation orient = cluster_index_orientation(kind);
    const split_stats st = compute_stats(scores, o_t);

    const double worst = orient == orientation::lower_better ? inf : -inf;
    if (st.c_o == st.c_i) return {worst, orient};

    const double separation = st.c_o - st.c_i; // > 0 by split construction
    double value = 0.0;
    switch (kind) {
    case cluster_index_kind::xb:
        value = st.ssw / (static_cast<double>(st.n) * separation * separation);
        break;
    case cluster_index_kind::rs:
        value = st.ssb / st.tss;
        break;
    case cluster_index_kind::ch:
        value = st.ssw > 0.0
                    ? st.ssb * static_cast<double>(st.n - 2) / st.ssw
                    : inf; // two constant clusters: ideal
        break;
    case cluster_index_kind::stddev: {
        const double so = std::sqrt(st.ss_o / static_cast<double>(st.o));
        const double si = std::sqrt(st.ss_i / static_cast<double>(st.m));
        value = 0.5 * (so + si) / std::sqrt(st.tss / static_cast<double>(st.n));
        break;
    }
    case cluster_index_kind::hubert:
        value = hubert_gamma(st);
        break;
    case cluster_index_kind::silhouette:
        value = silhouette(st);
        break;
    case cluster_index_kind::iidx: {
        double e1 = 0.0, e2 = 0.0;
        for (double v : st.out_vals) {
            e1 += std::fabs(v - st.mean);
            e2 += std::fabs(v - st.c_o);
        }
        for (double v : st.in_vals) {
            e1 += std::fabs(v - st.mean);
            e2 += std::fabs(v - st.c_i);
        }
        if (e2 == 0.0) {
            value = inf;
        } else {
            const double base = 0.5 * (e1 / e2) * separation;
            value = base * base;
        }
        break;
    }
    case cluster_index_kind::db: {
        double so = 0.0, si = 0.0;
        for (double v : st.out_vals) so += std::fabs(v - st.c_o);
        for (double v : st.in_vals) si += std::fabs(v - st.c_i);
        so /= static_cast<double>(st.o);
        si /= static_cast<double>(st.m);
        value = (so + si) / separation;
        break;
    }
    case cluster_index_kind::sd: {
        const double var_all = st.tss / static_cast<double>(st.n);
        const double scat = 0.5 *
                            (st.ss_o / static_cast<double>(st.o) +
                             st.ss_i / static_cast<double>(st.m)) /
                            var_all;
        value = scat + 2.0 / separation;
        break;
    }
    case cluster_index_kind::dunn: {
        const double min_cross = st.out_vals.front() - st.in_vals.back();
        const double diam = std::max(st.out_vals.back() - st.out_vals.front(),
                                     st.in_vals.back() - st.in_vals.front());
        value = diam > 0.0 ? std::max(min_cross, 0.0) / diam
                           : inf; // two constant clusters: ideal
        break;
    }
    }
    return {value, orient};
}

} // namespace uoms::standalone
