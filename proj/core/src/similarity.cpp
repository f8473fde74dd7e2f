#include "uoms/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "uoms/error.hpp"

namespace uoms {
namespace {

void check_shapes(const rank_vector& a, const rank_vector& b) {
    if (a.size() != b.size()) fail(errc::shape_mismatch, "rank vectors differ in length");
    if (a.size() == 0) fail(errc::empty_input, "empty rank vectors");
}

// merge-sort exchange count; equal elements do not count as exchanges
std::uint64_t count_exchanges(std::vector<double>& v, std::vector<double>& tmp,
                              std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t swaps = count_exchanges(v, tmp, lo, mid) + count_exchanges(v, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += mid - i;
            tmp[k++] = v[j++];
        } else {
            tmp[k++] = v[i++];
        }
    }
    while (i < mid) tmp[k++] = v[i++];
    while (j < hi) tmp[k++] = v[j++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
    return swaps;
}

std::uint64_t tie_pair_count(std::vector<double> sorted_vals) {
    std::uint64_t pairs = 0;
    std::size_t i = 0;
    const std::size_t n = sorted_vals.size();
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && sorted_vals[j + 1] == sorted_vals[i]) ++j;
        const std::uint64_t t = j - i + 1;
        pairs += t * (t - 1) / 2;
        i = j + 1;
    }
    return pairs;
}

} // namespace

similarity_kind similarity_from_name(const std::string& name) {
    if (name == "spearman" || name == "rho") return similarity_kind::spearman;
    if (name == "kendall" || name == "tau") return similarity_kind::kendall;
    if (name == "ndcg") return similarity_kind::ndcg;
    fail(errc::config_error, "unknown similarity '" + name + "'");
}

const char* similarity_name(similarity_kind kind) {
    switch (kind) {
    case similarity_kind::spearman: return "spearman";
    case similarity_kind::kendall: return "kendall";
    case similarity_kind::ndcg: return "ndcg";
    }
    return "?";
}

double spearman_rho(const rank_vector& a, const rank_vector& b) {
    check_shapes(a, b);
    const std::size_t n = a.size();
    if (n < 2) fail(errc::degenerate_ranking, "need at least 2 samples");

    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);

    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma;
        const double db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) fail(errc::degenerate_ranking, "constant ranking");
    return sab / std::sqrt(saa * sbb);
}

double kendall_tau(const rank_vector& a, const rank_vector& b) {
    check_shapes(a, b);
    const std::size_t n = a.size();
    if (n < 2) fail(errc::degenerate_ranking, "need at least 2 samples");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (a[i] != a[j]) return a[i] < a[j];
        return b[i] < b[j];
    });

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    // ties in a, and joint ties in (a, b)
    std::uint64_t n1 = 0, n3 = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && a[order[j + 1]] == a[order[i]]) ++j;
            const std::uint64_t t = j - i + 1;
            n1 += t * (t - 1) / 2;
            std::size_t u = i;
            while (u <= j) {
                std::size_t v = u;
                while (v + 1 <= j && b[order[v + 1]] == b[order[u]]) ++v;
                const std::uint64_t s = v - u + 1;
                n3 += s * (s - 1) / 2;
                u = v + 1;
            }
            i = j + 1;
        }
    }

    std::vector<double> bv(n);
    for (std::size_t i = 0; i < n; ++i) bv[i] = b[order[i]];
    const std::uint64_t n2 = tie_pair_count([&] {
        std::vector<double> s(bv);
        std::sort(s.begin(), s.end());
        return s;
    }());

    std::vector<double> tmp(n);
    const std::uint64_t exchanges = count_exchanges(bv, tmp, 0, n);

    if (n0 == n1 || n0 == n2) fail(errc::degenerate_ranking, "constant ranking");

    const double numerator = static_cast<double>(n0) - static_cast<double>(n1) -
                             static_cast<double>(n2) + static_cast<double>(n3) -
                             2.0 * static_cast<double>(exchanges);
    const double denom = std::sqrt(static_cast<double>(n0 - n1)) *
                         std::sqrt(static_cast<double>(n0 - n2));
    return numerator / denom;
}

namespace {

double directed_ndcg(const rank_vector& rel_source, const rank_vector& pos_source) {
    const std::size_t n = rel_source.size();
    std::vector<double> rel(n);
    for (std::size_t i = 0; i < n; ++i) rel[i] = 1.0 / rel_source[i];

    double dcg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dcg += rel[i] / std::log2(pos_source[i] + 1.0);
    }

    std::sort(rel.begin(), rel.end(), std::greater<>());
    double idcg = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        idcg += rel[p] / std::log2(static_cast<double>(p + 2));
    }
    return dcg / idcg;
}

} // namespace

double ndcg_similarity(const rank_vector& a, const rank_vector& b) {
    check_shapes(a, b);
    return 0.5 * (directed_ndcg(a, b) + directed_ndcg(b, a));
}

double rank_similarity(similarity_kind kind, const rank_vector& a, const rank_vector& b) {
    switch (kind) {
    case similarity_kind::spearman: return spearman_rho(a, b);
    case similarity_kind::kendall: return kendall_tau(a, b);
    case similarity_kind::ndcg: return ndcg_similarity(a, b);
    }
    fail(errc::config_error, "bad similarity kind");
}

double score_similarity(similarity_kind kind, std::span<const double> x,
                        std::span<const double> y) {
    return rank_similarity(kind, to_rank_vector(x), to_rank_vector(y));
}

} // namespace uoms
