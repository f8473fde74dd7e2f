#include "uoms/consensus/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "uoms/detectors/model_spec.hpp"
#include "uoms/error.hpp"
#include "uoms/matrix.hpp"
#include "uoms/rng.hpp"

namespace uoms::consensus {
namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

std::size_t argmax_lowest(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double safe_spearman(const rank_vector& a, const rank_vector& b) {
    try {
        return spearman_rho(a, b);
    } catch (const error& e) {
        if (e.code() == errc::degenerate_ranking) return 0.0;
        throw;
    }
}

} // namespace

ranked_matrix::ranked_matrix(const score_matrix& m) : matrix_(&m) {
    ranks_.reserve(m.n_models());
    for (std::size_t i = 0; i < m.n_models(); ++i) {
        ranks_.push_back(to_rank_vector(m.column(i)));
    }
}

double ranked_matrix::similarity(similarity_kind kind, std::size_t i, std::size_t j) const {
    if (degenerate(i) || degenerate(j)) return 0.0;
    try {
        return rank_similarity(kind, ranks_[i], ranks_[j]);
    } catch (const error& e) {
        if (e.code() == errc::degenerate_ranking) return 0.0;
        throw;
    }
}

consensus_result udr(const ranked_matrix& m, similarity_kind kind, long P,
                     std::uint64_t seed) {
    if (P == 0 || P < -1) fail(errc::config_error, "udr sampling budget P must be >= 1");
    const std::size_t n_models = m.n_models();

    std::map<std::string, std::vector<std::size_t>> families;
    for (std::size_t i = 0; i < n_models; ++i) {
        families[detectors::family_of_model_id(m.scores().model_id(i))].push_back(i);
    }

    consensus_result result;
    result.per_model.assign(n_models, neg_inf);
    for (const auto& [name, members] : families) {
        if (members.size() < 2) continue; // single-member family: stays -inf
        for (std::size_t slot = 0; slot < members.size(); ++slot) {
            const std::size_t i = members[slot];
            const std::size_t budget = static_cast<std::size_t>(
                P < 0 ? std::min<std::size_t>(members.size() - 1, 18)
                      : std::min<std::size_t>(static_cast<std::size_t>(P),
                                              members.size() - 1));
            rng r(mix_seed(seed ^ 0x75647221ULL, i));
            const auto picks = r.sample_without_replacement(members.size() - 1, budget);
            std::vector<double> sims;
            sims.reserve(budget);
            for (std::size_t pick : picks) {
                // index into the family with slot `slot` removed
                const std::size_t other = pick < slot ? pick : pick + 1;
                sims.push_back(m.similarity(kind, i, members[other]));
            }
            result.per_model[i] = median_of(std::move(sims));
        }
    }
    result.selected = argmax_lowest(result.per_model);
    return result;
}

consensus_result model_centrality(const ranked_matrix& m, similarity_kind kind) {
    const std::size_t n_models = m.n_models();
    if (n_models < 2) fail(errc::not_enough_data, "model centrality needs N >= 2");

    matrix sims(n_models, n_models);
    for (std::size_t i = 0; i < n_models; ++i) {
        for (std::size_t j = i + 1; j < n_models; ++j) {
            const double s = m.similarity(kind, i, j);
            sims(i, j) = s;
            sims(j, i) = s;
        }
    }

    consensus_result result;
    result.per_model.assign(n_models, 0.0);
    for (std::size_t i = 0; i < n_models; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_models; ++j) {
            if (j != i) acc += sims(i, j);
        }
        result.per_model[i] = acc / static_cast<double>(n_models - 1);
    }
    result.selected = argmax_lowest(result.per_model);
    return result;
}

consensus_result model_centrality_sampled(const ranked_matrix& m, similarity_kind kind,
                                          long P, std::uint64_t seed) {
    const std::size_t n_models = m.n_models();
    if (n_models < 2) fail(errc::not_enough_data, "model centrality needs N >= 2");
    std::size_t budget;
    if (P < 0) {
        budget = static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(n_models))));
    } else if (P >= 1 && static_cast<std::size_t>(P) <= n_models - 1) {
        budget = static_cast<std::size_t>(P);
    } else {
        fail(errc::config_error, "mc_s requires 1 <= P <= N-1");
    }
    budget = std::min(budget, n_models - 1);

    consensus_result result;
    result.per_model.assign(n_models, 0.0);
    for (std::size_t i = 0; i < n_models; ++i) {
        rng r(mix_seed(seed ^ 0x6d637321ULL, i));
        double acc = 0.0;
        for (std::size_t pick : r.sample_without_replacement(n_models - 1, budget)) {
            const std::size_t other = pick < i ? pick : pick + 1;
            acc += m.similarity(kind, i, other);
        }
        result.per_model[i] = acc / static_cast<double>(budget);
    }
    result.selected = argmax_lowest(result.per_model);
    return result;
}

consensus_result hits(const ranked_matrix& m, double tol, std::size_t max_iterations) {
    const std::size_t n_models = m.n_models();
    const std::size_t n_samples = m.n_samples();
    if (n_models == 0) fail(errc::not_enough_data, "empty pool");

    // W[i][j] = 1 / r_ij over fractional ranks; strictly positive
    matrix W(n_models, n_samples);
    for (std::size_t i = 0; i < n_models; ++i) {
        const rank_vector& rv = m.ranks(i);
        for (std::size_t j = 0; j < n_samples; ++j) W(i, j) = 1.0 / rv[j];
    }

    const auto normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& x : v) x /= norm;
        }
        return norm;
    };

    std::vector<double> hub(n_models, 1.0 / std::sqrt(static_cast<double>(n_models)));
    std::vector<double> auth(n_samples, 0.0);

    consensus_result result;
    result.converged = false;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        std::vector<double> new_auth(n_samples, 0.0);
        for (std::size_t i = 0; i < n_models; ++i) {
            const double h = hub[i];
            for (std::size_t j = 0; j < n_samples; ++j) new_auth[j] += W(i, j) * h;
        }
        normalize(new_auth);

        std::vector<double> new_hub(n_models, 0.0);
        for (std::size_t i = 0; i < n_models; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n_samples; ++j) acc += W(i, j) * new_auth[j];
            new_hub[i] = acc;
        }
        normalize(new_hub);

        double delta = 0.0;
        for (std::size_t i = 0; i < n_models; ++i) {
            delta = std::max(delta, std::fabs(new_hub[i] - hub[i]));
        }
        for (std::size_t j = 0; j < n_samples; ++j) {
            delta = std::max(delta, std::fabs(new_auth[j] - auth[j]));
        }
        hub = std::move(new_hub);
        auth = std::move(new_auth);
        result.iterations = it + 1;
        if (delta < tol) {
            result.converged = true;
            break;
        }
    }

    result.per_model = std::move(hub);
    result.aggregate_scores = std::move(auth);
    result.selected = argmax_lowest(result.per_model);
    return result;
}

consensus_result ensemble_select(const ranked_matrix& m) {
    return ensemble_select(m, nullptr);
}

consensus_result ensemble_select(const ranked_matrix& m, ensemble_trace* trace) {
    const std::size_t n_models = m.n_models();
    const std::size_t n_samples = m.n_samples();
    if (n_models == 0) fail(errc::not_enough_data, "empty pool");

    // inverse-rank score vectors, one per model
    std::vector<std::vector<double>> inv(n_models, std::vector<double>(n_samples));
    for (std::size_t i = 0; i < n_models; ++i) {
        const rank_vector& rv = m.ranks(i);
        for (std::size_t j = 0; j < n_samples; ++j) inv[i][j] = 1.0 / rv[j];
    }

    const auto average_of = [&](const std::vector<std::size_t>& members) {
        std::vector<double> avg(n_samples, 0.0);
        for (std::size_t i : members) {
            for (std::size_t j = 0; j < n_samples; ++j) avg[j] += inv[i][j];
        }
        for (double& v : avg) v /= static_cast<double>(members.size());
        return avg;
    };

    std::vector<std::size_t> all(n_models);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::vector<double> target = average_of(all);
    rank_vector target_ranks = to_rank_vector(target);

    const auto corr_to_target = [&](std::size_t i) {
        return safe_spearman(m.ranks(i), target_ranks);
    };

    std::vector<std::size_t> candidates = all;
    std::vector<std::size_t> ensemble;
    double credit = 0.0;

    while (!candidates.empty()) {
        std::size_t best_pos = 0;
        double best_corr = neg_inf;
        for (std::size_t pos = 0; pos < candidates.size(); ++pos) {
            const double c = corr_to_target(candidates[pos]);
            if (c > best_corr) {
                best_corr = c;
                best_pos = pos;
            }
        }
        const std::size_t fetched = candidates[best_pos];
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best_pos));

        std::vector<std::size_t> extended = ensemble;
        extended.push_back(fetched);
        const double admission =
            safe_spearman(to_rank_vector(average_of(extended)), target_ranks);
        if (admission * static_cast<double>(ensemble.size()) < credit) {
            break; // ensemble not updated
        }
        ensemble.push_back(fetched);
        credit += best_corr;
        target = average_of(ensemble);
        target_ranks = to_rank_vector(target);
        if (trace != nullptr) {
            trace->admitted.push_back(fetched);
            trace->admission_corr.push_back(best_corr);
        }
    }
    if (trace != nullptr) trace->credit = credit;

    consensus_result result;
    result.per_model.resize(n_models);
    for (std::size_t i = 0; i < n_models; ++i) result.per_model[i] = corr_to_target(i);
    result.aggregate_scores = std::move(target);
    result.selected = argmax_lowest(result.per_model);
    result.iterations = ensemble.size();
    return result;
}

} // namespace uoms::consensus
