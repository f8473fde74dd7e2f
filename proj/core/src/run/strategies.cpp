#include "uoms/run/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uoms/error.hpp"
#include "uoms/rng.hpp"
#include "uoms/standalone/mass_volume.hpp"

namespace uoms::run {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::uint64_t name_salt(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a, fixed across platforms
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::vector<std::string> cluster_names = {"xb", "rs", "ch", "std", "h",
                                                "s",  "i",  "db", "sd",  "d"};

bool is_cluster_index(const std::string& name) {
    return std::find(cluster_names.begin(), cluster_names.end(), name) != cluster_names.end();
}

similarity_kind suffix_kind(const std::string& name) {
    const std::size_t dash = name.rfind('-');
    return similarity_from_name(name.substr(dash + 1));
}

void select_best(strategy_verdict& v) {
    const bool lower = v.orient == standalone::orientation::lower_better;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < v.measure.size(); ++i) {
        if (!v.excluded.empty() && v.excluded[i]) continue;
        if (!best || (lower ? v.measure[i] < v.measure[*best]
                            : v.measure[i] > v.measure[*best])) {
            best = i;
        }
    }
    v.selected = best ? best : std::optional<std::size_t>{0};
}

std::size_t require_outlier_count(const strategy_context& ctx) {
    const dataset_bundle* ds = ctx.dataset();
    if (ds == nullptr || ds->n_outliers == 0) {
        fail(errc::not_enough_data,
             "strategy requires the ground-truth outlier count o_t (labeled dataset)");
    }
    return ds->n_outliers;
}

strategy_verdict from_consensus(const std::string& name, const consensus::consensus_result& r,
                                bool aggregate_only) {
    strategy_verdict v;
    v.strategy = name;
    v.converged = r.converged;
    if (aggregate_only) {
        v.aggregate_scores = r.aggregate_scores;
        return v;
    }
    v.measure = r.per_model;
    v.selected = r.selected;
    return v;
}

} // namespace

const std::vector<std::string>& all_strategy_names() {
    static const std::vector<std::string> names = {
        "xb",      "rs",      "ch",       "std",     "h",       "s",
        "i",       "db",      "sd",       "d",       "em",      "mv",
        "ireos",   "udr-rho", "udr-tau",  "udr-ndcg", "mc-rho",  "mc-tau",
        "mc-ndcg", "mcs-rho", "mcs-tau",  "mcs-ndcg", "hits",    "ens",
        "hits-auth", "ens-pseudo"};
    return names;
}

const std::vector<std::string>& default_strategy_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> all = all_strategy_names();
        all.erase(std::remove(all.begin(), all.end(), "ireos"), all.end());
        return all;
    }();
    return names;
}

bool strategy_known(const std::string& name) {
    const auto& all = all_strategy_names();
    return std::find(all.begin(), all.end(), name) != all.end();
}

bool strategy_needs_features(const std::string& name) { return name == "ireos"; }

bool strategy_needs_outlier_count(const std::string& name) { return is_cluster_index(name); }

bool strategy_is_aggregate(const std::string& name) {
    return name == "hits-auth" || name == "ens-pseudo";
}

strategy_context::strategy_context(const score_matrix& scores, const dataset_bundle* dataset,
                                   const strategy_params& params, std::uint64_t seed)
    : scores_(scores), dataset_(dataset), params_(params), seed_(seed) {}

strategy_context::~strategy_context() = default;

const consensus::ranked_matrix& strategy_context::ranked() {
    if (!ranked_) ranked_ = std::make_unique<consensus::ranked_matrix>(scores_);
    return *ranked_;
}

const standalone::ireos_profile& strategy_context::ireos_profile() {
    if (!profile_) {
        if (dataset_ == nullptr) {
            fail(errc::not_enough_data, "ireos requires the input feature matrix");
        }
        standalone::ireos_config cfg = params_.ireos;
        cfg.seed = mix_seed(seed_, name_salt("ireos"));
        if (!params_.ireos_mode_set) {
            cfg.mode = dataset_->n_samples() > 2000
                           ? standalone::separability_mode::knn_distance
                           : standalone::separability_mode::kernel_classifier;
        }
        profile_ = std::make_unique<standalone::ireos_profile>(
            standalone::compute_ireos_profile(dataset_->X, cfg));
    }
    return *profile_;
}

const consensus::consensus_result& strategy_context::hits_result() {
    if (!hits_) {
        hits_ = std::make_unique<consensus::consensus_result>(
            consensus::hits(ranked(), params_.hits_tol, params_.hits_max_iterations));
    }
    return *hits_;
}

const consensus::consensus_result& strategy_context::ensemble_result() {
    if (!ensemble_) {
        ensemble_ = std::make_unique<consensus::consensus_result>(
            consensus::ensemble_select(ranked()));
    }
    return *ensemble_;
}

strategy_verdict run_strategy(const std::string& name, strategy_context& ctx) {
    if (!strategy_known(name)) fail(errc::config_error, "unknown strategy '" + name + "'");
    const score_matrix& scores = ctx.scores();
    const std::size_t n_models = scores.n_models();
    if (n_models == 0) fail(errc::not_enough_data, "score matrix has no models");

    if (is_cluster_index(name)) {
        const std::size_t o_t = require_outlier_count(ctx);
        const auto kind = standalone::cluster_index_from_name(name);
        strategy_verdict v;
        v.strategy = name;
        v.orient = standalone::cluster_index_orientation(kind);
        v.measure.resize(n_models);
        v.excluded.assign(n_models, false);
        for (std::size_t m = 0; m < n_models; ++m) {
            const auto iv = standalone::cluster_index(scores.column(m), o_t, kind);
            v.measure[m] = iv.value;
            v.excluded[m] = std::isinf(iv.value);
        }
        select_best(v);
        return v;
    }

    if (name == "mv" || name == "em") {
        strategy_verdict v;
        v.strategy = name;
        v.orient = name == "mv" ? standalone::orientation::lower_better
                                : standalone::orientation::higher_better;
        v.measure.resize(n_models);
        v.excluded.assign(n_models, false);
        for (std::size_t m = 0; m < n_models; ++m) {
            const auto r = name == "mv"
                               ? standalone::mass_volume(scores.column(m), ctx.params().mv_grid)
                               : standalone::excess_mass(scores.column(m), ctx.params().em_grid);
            v.measure[m] = r.area;
            v.excluded[m] = r.degenerate;
        }
        select_best(v);
        return v;
    }

    if (name == "ireos") {
        const auto& profile = ctx.ireos_profile();
        strategy_verdict v;
        v.strategy = name;
        v.measure.assign(n_models, -inf);
        v.excluded.assign(n_models, false);
        for (std::size_t m = 0; m < n_models; ++m) {
            try {
                v.measure[m] = standalone::ireos_from_profile(
                                   profile, standalone::kriegel_weights(scores.column(m)))
                                   .value;
            } catch (const error& e) {
                if (e.code() != errc::degenerate_model) throw;
                v.excluded[m] = true;
            }
        }
        select_best(v);
        return v;
    }

    const std::uint64_t seed = mix_seed(ctx.seed(), name_salt(name));
    if (name.rfind("udr-", 0) == 0) {
        return from_consensus(name,
                              consensus::udr(ctx.ranked(), suffix_kind(name),
                                             ctx.params().udr_p, seed),
                              false);
    }
    if (name.rfind("mcs-", 0) == 0) {
        return from_consensus(name,
                              consensus::model_centrality_sampled(
                                  ctx.ranked(), suffix_kind(name), ctx.params().mcs_p, seed),
                              false);
    }
    if (name.rfind("mc-", 0) == 0) {
        return from_consensus(
            name, consensus::model_centrality(ctx.ranked(), suffix_kind(name)), false);
    }
    if (name == "hits") return from_consensus(name, ctx.hits_result(), false);
    if (name == "hits-auth") return from_consensus(name, ctx.hits_result(), true);
    if (name == "ens") return from_consensus(name, ctx.ensemble_result(), false);
    if (name == "ens-pseudo") return from_consensus(name, ctx.ensemble_result(), true);

    fail(errc::config_error, "unhandled strategy '" + name + "'");
}

} // namespace uoms::run
