#pragma once

#include <span>
#include <string>

#include "uoms/ranking.hpp"

namespace uoms {

enum class similarity_kind { spearman, kendall, ndcg };

similarity_kind similarity_from_name(const std::string& name);
const char* similarity_name(similarity_kind kind);

// Pearson correlation of the two fractional-rank vectors.
// Throws ShapeMismatch / DegenerateRanking.
double spearman_rho(const rank_vector& a, const rank_vector& b);

// Kendall's tau-b (tie corrected), O(n log n) via merge-sort inversion
// counting. Same error contract as spearman_rho.
double kendall_tau(const rank_vector& a, const rank_vector& b);

// Symmetrized NDCG: relevance of item j is 1/rank_a(j), positions are
// discounted by 1/log2(pos+1) using b's fractional ranks, normalized by
// the ideal DCG over integer positions; the result is the mean of
// ndcg(a|b) and ndcg(b|a). Always in (0, 1]; 1 for identical tie-free
// rankings.
double ndcg_similarity(const rank_vector& a, const rank_vector& b);

double rank_similarity(similarity_kind kind, const rank_vector& a, const rank_vector& b);

// Convenience: rank two raw score columns, then apply the kernel.
double score_similarity(similarity_kind kind, std::span<const double> x,
                        std::span<const double> y);

} // namespace uoms
