#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uoms/score_matrix.hpp"
#include "uoms/similarity.hpp"

namespace uoms::consensus {

// Output of one consensus strategy: internal measure per model
// (higher-better), the argmax selection (lowest index on ties), and, for
// the iterative schemes, a per-sample aggregate ranking.
struct consensus_result {
    std::vector<double> per_model;
    std::optional<std::vector<double>> aggregate_scores;
    std::size_t selected = 0;
    bool converged = true;
    std::size_t iterations = 0;
};

// Shared per-matrix rank state so strategies do not re-rank columns.
class ranked_matrix {
public:
    explicit ranked_matrix(const score_matrix& m);

    const score_matrix& scores() const { return *matrix_; }
    std::size_t n_models() const { return ranks_.size(); }
    std::size_t n_samples() const { return matrix_->n_samples(); }
    const rank_vector& ranks(std::size_t i) const { return ranks_[i]; }
    bool degenerate(std::size_t i) const { return matrix_->degenerate(i); }

    // 0 when either column is degenerate, so constant models never win.
    double similarity(similarity_kind kind, std::size_t i, std::size_t j) const;

private:
    const score_matrix* matrix_;
    std::vector<rank_vector> ranks_;
};

// Agreement with same-family mates under different hyperparameter
// configurations: UDR_i = median of P sampled pairwise similarities.
// Families with a single member score -inf. P <= 0 picks the default
// min(family size - 1, 18).
consensus_result udr(const ranked_matrix& m, similarity_kind kind, long P,
                     std::uint64_t seed);

// Mean similarity to every other model; the winner is the pool medoid.
consensus_result model_centrality(const ranked_matrix& m, similarity_kind kind);

// Sampled variant: mean similarity to P models drawn without replacement.
// P <= 0 picks the default ceil(sqrt(N)).
consensus_result model_centrality_sampled(const ranked_matrix& m, similarity_kind kind,
                                          long P, std::uint64_t seed);

// HITS on the complete bipartite model-sample graph with 1/rank edge
// weights; per_model = hubness, aggregate_scores = authorities, both unit
// L2 norm. Non-convergence returns the last iterate with converged=false.
consensus_result hits(const ranked_matrix& m, double tol = 1e-9,
                      std::size_t max_iterations = 1000);

// Greedy ensemble over inverse-rank score vectors: grow E by descending
// rank correlation to the running pseudo ground truth, admitting a model
// only while corr(avg(E + m), target) * |E| >= C; per_model is every
// model's correlation to the final target, aggregate_scores the target
// itself. The admission test reads the pre-admission target and |E|.
consensus_result ensemble_select(const ranked_matrix& m);

struct ensemble_trace {
    std::vector<std::size_t> admitted; // E in admission order
    std::vector<double> admission_corr;
    double credit = 0.0; // final C
};

consensus_result ensemble_select(const ranked_matrix& m, ensemble_trace* trace);

} // namespace uoms::consensus
