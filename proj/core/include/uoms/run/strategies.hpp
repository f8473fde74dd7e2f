#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uoms/consensus/consensus.hpp"
#include "uoms/dataset.hpp"
#include "uoms/score_matrix.hpp"
#include "uoms/standalone/cluster_indices.hpp"
#include "uoms/standalone/ireos.hpp"

namespace uoms::run {

// Per-strategy knobs with the benchmark defaults baked in.
struct strategy_params {
    std::size_t mv_grid = 1000;
    std::size_t em_grid = 1000;
    standalone::ireos_config ireos; // tol 5e-3, clump 10, sampling 100
    bool ireos_mode_set = false;    // otherwise kernel below 2000 samples, knn above
    long udr_p = -1;                // default min(family size - 1, 18)
    long mcs_p = -1;                // default ceil(sqrt(N))
    double hits_tol = 1e-9;
    std::size_t hits_max_iterations = 1000;
};

struct strategy_verdict {
    std::string strategy;
    std::vector<double> measure; // per model; empty for aggregate strategies
    standalone::orientation orient = standalone::orientation::higher_better;
    std::vector<bool> excluded;  // degenerate models, never selectable
    std::optional<std::size_t> selected;
    std::optional<std::vector<double>> aggregate_scores;
    bool converged = true;
};

// Canonical roster: ten cluster indices, the two curve measures, ireos,
// the consensus selectors with their similarity variants, and the two
// aggregate rankings.
const std::vector<std::string>& all_strategy_names();
// Everything except ireos, whose per-sample classifiers are costly.
const std::vector<std::string>& default_strategy_names();
bool strategy_known(const std::string& name);
bool strategy_needs_features(const std::string& name);
bool strategy_needs_outlier_count(const std::string& name);
bool strategy_is_aggregate(const std::string& name);

// Shared lazily-built state for one (dataset, score matrix) pair, so
// xb/rs/ch reuse splits, hits/hits-auth share one power iteration, and
// every model reuses the dataset-level separability profile.
class strategy_context {
public:
    strategy_context(const score_matrix& scores, const dataset_bundle* dataset,
                     const strategy_params& params, std::uint64_t seed);
    ~strategy_context();

    const score_matrix& scores() const { return scores_; }
    const dataset_bundle* dataset() const { return dataset_; }
    const strategy_params& params() const { return params_; }
    std::uint64_t seed() const { return seed_; }

    const consensus::ranked_matrix& ranked();
    const standalone::ireos_profile& ireos_profile();
    const consensus::consensus_result& hits_result();
    const consensus::consensus_result& ensemble_result();

private:
    const score_matrix& scores_;
    const dataset_bundle* dataset_;
    strategy_params params_;
    std::uint64_t seed_;
    std::unique_ptr<consensus::ranked_matrix> ranked_;
    std::unique_ptr<standalone::ireos_profile> profile_;
    std::unique_ptr<consensus::consensus_result> hits_;
    std::unique_ptr<consensus::consensus_result> ensemble_;
};

strategy_verdict run_strategy(const std::string& name, strategy_context& ctx);

} // namespace uoms::run
