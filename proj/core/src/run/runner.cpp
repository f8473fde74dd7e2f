#include "uoms/run/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "uoms/detectors/zoo.hpp"
#include "uoms/error.hpp"
#include "uoms/eval/metrics.hpp"
#include "uoms/io/csv.hpp"
#include "uoms/io/formats.hpp"
#include "uoms/run/parallel.hpp"

namespace uoms::run {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> known_metrics = {"ap", "roc", "prec_at_k"};

double metric_value(const std::string& metric, std::span<const double> scores,
                    std::span<const int> labels, std::size_t o_t) {
    if (metric == "ap") return eval::average_precision(scores, labels);
    if (metric == "roc") return eval::roc_auc(scores, labels);
    if (metric == "prec_at_k") return eval::precision_at_k(scores, labels, o_t);
    fail(errc::config_error, "unknown metric '" + metric + "'");
}

std::string pct3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

double quantile(std::vector<double> sorted_asc, double q) {
    const double pos = q * static_cast<double>(sorted_asc.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted_asc.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted_asc[lo] * (1.0 - frac) + sorted_asc[hi] * frac;
}

fs::path scores_path(const run_config& config, const std::string& dataset) {
    return config.out_dir / "scores" / (dataset + ".csv");
}

struct labeled_pool_perf {
    std::vector<std::string> datasets;                       // labeled only, run order
    std::map<std::string, std::vector<std::string>> models;  // dataset -> model ids
    // metric -> dataset -> per-model values (model order as above)
    std::map<std::string, std::map<std::string, std::vector<double>>> values;
};

labeled_pool_perf read_model_perf(const run_config& config) {
    const io::csv_table table = io::read_csv(config.out_dir / "model_perf.csv");
    const std::size_t ds_col = table.column_index("dataset");
    const std::size_t id_col = table.column_index("model_id");

    labeled_pool_perf perf;
    for (const auto& row : table.rows) {
        const std::string& ds = row[ds_col];
        if (perf.models.find(ds) == perf.models.end()) {
            perf.datasets.push_back(ds);
            perf.models[ds] = {};
        }
        perf.models[ds].push_back(row[id_col]);
        for (const std::string& metric : config.metrics) {
            const std::size_t col = table.column_index(metric);
            perf.values[metric][ds].push_back(io::parse_double(row[col], "model_perf.csv"));
        }
    }
    if (perf.datasets.empty()) {
        fail(errc::not_enough_data, "model_perf.csv holds no labeled datasets");
    }
    return perf;
}

struct comparison_output {
    eval::perf_table table; // methods (+ baselines) x datasets
    std::vector<std::vector<double>> sorted_model_perf;
    std::vector<double> random_baseline;
    std::optional<std::vector<double>> iforest_baseline;
    std::optional<std::vector<double>> best_model;
};

void write_comparison(const run_config& config, const std::string& metric,
                      const comparison_output& cmp) {
    const fs::path dir = config.out_dir / "compare";
    const auto& table = cmp.table;

    {
        const matrix grid = eval::pairwise_comparison(table);
        std::vector<std::string> lines;
        std::vector<std::string> fields{"method"};
        fields.insert(fields.end(), table.methods.begin(), table.methods.end());
        lines.push_back(io::join_csv(fields));
        for (std::size_t r = 0; r < table.methods.size(); ++r) {
            fields.assign(1, table.methods[r]);
            for (std::size_t c = 0; c < table.methods.size(); ++c) {
                fields.push_back(io::format_double(grid(r, c)));
            }
            lines.push_back(io::join_csv(fields));
        }
        io::write_lines(dir / ("pairwise_" + metric + ".csv"), lines);
    }

    {
        std::vector<std::string> lines{
            "method,p_vs_random,p_vs_iforest_r,q,mean,std"};
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            const auto col = table.column(m);
            const auto s = eval::summarize_method(
                table.methods[m], col, cmp.random_baseline,
                cmp.iforest_baseline ? *cmp.iforest_baseline : cmp.random_baseline,
                cmp.sorted_model_perf);
            std::vector<std::string> fields{
                s.method,
                io::format_double(s.p_vs_random),
                cmp.iforest_baseline ? io::format_double(s.p_vs_iforest) : std::string{},
                std::to_string(s.q),
                io::format_double(s.mean),
                io::format_double(s.stddev)};
            lines.push_back(io::join_csv(fields));
        }
        io::write_lines(dir / ("summary_" + metric + ".csv"), lines);
    }

    if (cmp.iforest_baseline) {
        std::vector<std::string> lines;
        std::vector<std::string> fields{"dataset"};
        for (const std::string& m : table.methods) {
            if (m != "iforest-r") fields.push_back(m);
        }
        if (cmp.best_model) fields.push_back("best");
        lines.push_back(io::join_csv(fields));
        for (std::size_t t = 0; t < table.datasets.size(); ++t) {
            fields.assign(1, table.datasets[t]);
            for (std::size_t m = 0; m < table.methods.size(); ++m) {
                if (table.methods[m] == "iforest-r") continue;
                fields.push_back(
                    io::format_double(table.values(t, m) - (*cmp.iforest_baseline)[t]));
            }
            if (cmp.best_model) {
                fields.push_back(
                    io::format_double((*cmp.best_model)[t] - (*cmp.iforest_baseline)[t]));
            }
            lines.push_back(io::join_csv(fields));
        }
        io::write_lines(dir / ("differences_" + metric + ".csv"), lines);
    }
}

std::vector<std::string> family_roster(const std::vector<std::string>& model_ids) {
    std::vector<std::string> families;
    for (const std::string& id : model_ids) {
        const std::string fam = detectors::family_of_model_id(id);
        if (std::find(families.begin(), families.end(), fam) == families.end()) {
            families.push_back(fam);
        }
    }
    return families;
}

void write_familywise(const fs::path& path, const eval::perf_table& family_means) {
    std::vector<std::string> lines;
    std::vector<std::string> fields{"dataset"};
    fields.insert(fields.end(), family_means.methods.begin(), family_means.methods.end());
    fields.push_back("winner");
    lines.push_back(io::join_csv(fields));
    for (std::size_t t = 0; t < family_means.datasets.size(); ++t) {
        fields.assign(1, family_means.datasets[t]);
        double best = family_means.values(t, 0);
        for (std::size_t m = 1; m < family_means.methods.size(); ++m) {
            best = std::max(best, family_means.values(t, m));
        }
        std::string winner;
        for (std::size_t m = 0; m < family_means.methods.size(); ++m) {
            fields.push_back(io::format_double(family_means.values(t, m)));
            if (family_means.values(t, m) == best) {
                if (!winner.empty()) winner += '|';
                winner += family_means.methods[m];
            }
        }
        fields.push_back(winner);
        lines.push_back(io::join_csv(fields));
    }
    io::write_lines(path, lines);
}

} // namespace

void validate_metrics(const std::vector<std::string>& metrics) {
    if (metrics.empty()) fail(errc::config_error, "metric roster is empty");
    for (const std::string& m : metrics) {
        if (std::find(known_metrics.begin(), known_metrics.end(), m) == known_metrics.end()) {
            fail(errc::config_error, "unknown metric '" + m + "'");
        }
    }
}

std::vector<std::string> cmd_inspect(const run_config& config) {
    std::vector<std::string> lines{"name,n_points,n_dims,outlier_pct,labeled"};
    for (const fs::path& path : config.datasets) {
        const dataset_bundle ds = io::load_dataset(path);
        const std::string pct =
            ds.has_labels()
                ? pct3(100.0 * static_cast<double>(ds.n_outliers) /
                       static_cast<double>(ds.n_samples()))
                : std::string{};
        lines.push_back(io::join_csv({ds.name, std::to_string(ds.n_samples()),
                                      std::to_string(ds.n_features()), pct,
                                      ds.has_labels() ? "1" : "0"}));
    }
    io::write_lines(config.out_dir / "manifest.csv", lines);
    return lines;
}

void cmd_run_pool(const run_config& config) {
    if (config.datasets.empty()) fail(errc::config_error, "no datasets given");
    detectors::pool_config pc = config.pool;
    pc.pool_seed = config.seed;
    const std::vector<detectors::model_spec> pool = detectors::enumerate_model_pool(pc);

    std::vector<std::string> report{"dataset,model_id,event,detail"};
    for (const fs::path& path : config.datasets) {
        const dataset_bundle ds = io::load_dataset(path);
        const fs::path out_path = scores_path(config, ds.name);

        std::map<std::string, std::vector<double>> existing;
        std::vector<std::string> existing_order;
        if (fs::exists(out_path)) {
            const score_matrix prior = io::load_score_matrix(out_path, ds.name);
            if (prior.n_samples() != ds.n_samples()) {
                fail(errc::format_error, "'" + out_path.string() +
                                             "' row count does not match dataset '" +
                                             ds.name + "'; delete it to recompute");
            }
            for (std::size_t m = 0; m < prior.n_models(); ++m) {
                const auto col = prior.column(m);
                existing[prior.model_id(m)] = {col.begin(), col.end()};
                existing_order.push_back(prior.model_id(m));
            }
        }

        std::vector<std::optional<std::vector<double>>> columns(pool.size());
        std::vector<std::string> failures(pool.size());
        parallel_for(pool.size(), config.jobs, [&](std::size_t i) {
            const detectors::model_spec& spec = pool[i];
            const auto it = existing.find(spec.id());
            if (it != existing.end()) {
                columns[i] = it->second;
                return;
            }
            if (spec.imported()) return; // unfilled import slot
            try {
                columns[i] = detectors::fit_score(spec, ds.X, pc.minkowski_p);
            } catch (const error& e) {
                failures[i] = e.what();
            }
        });

        score_matrix scores(ds.name, ds.n_samples());
        std::set<std::string> in_pool;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const std::string id = pool[i].id();
            in_pool.insert(id);
            if (!failures[i].empty()) {
                report.push_back(
                    io::join_csv({ds.name, id, "detector_failure", failures[i]}));
                continue;
            }
            if (!columns[i]) continue;
            scores.add_column(id, *columns[i]);
        }
        // keep columns that are not part of the configured pool (e.g. a
        // wider earlier run) instead of destroying them
        for (const std::string& id : existing_order) {
            if (in_pool.count(id) == 0) {
                scores.add_column(id, existing[id]);
                report.push_back(io::join_csv({ds.name, id, "column_kept_extra",
                                               "not in configured pool"}));
            }
        }

        for (std::size_t m = 0; m < scores.n_models(); ++m) {
            if (scores.replaced_non_finite(m) > 0) {
                report.push_back(io::join_csv(
                    {ds.name, scores.model_id(m), "non_finite_replaced",
                     std::to_string(scores.replaced_non_finite(m)) + " entries"}));
            }
            if (scores.degenerate(m)) {
                report.push_back(io::join_csv(
                    {ds.name, scores.model_id(m), "degenerate_column", "constant scores"}));
            }
        }
        io::save_score_matrix(out_path, scores);
    }
    io::write_lines(config.out_dir / "run_report.csv", report);
}

void cmd_import_scores(const run_config& config, const fs::path& csv,
                       const std::string& family, const std::string& dataset_name) {
    const detectors::family fam = detectors::family_from_name(family);
    const score_matrix incoming = io::load_score_matrix(csv, dataset_name);

    // every imported column must sit on the family's exact grid
    detectors::pool_config family_only;
    family_only.families = {family};
    std::set<std::string> grid;
    for (const auto& spec : detectors::enumerate_model_pool(family_only)) {
        grid.insert(spec.id());
    }
    for (const std::string& id : incoming.model_ids()) {
        const detectors::model_spec spec = detectors::parse_model_id(id);
        if (spec.algo != fam) {
            fail(errc::format_error,
                 "column '" + id + "' does not belong to family '" + family + "'");
        }
        if (grid.count(id) == 0) {
            fail(errc::format_error, "column '" + id + "' is not on the " + family + " grid");
        }
    }

    const fs::path out_path = scores_path(config, dataset_name);
    std::map<std::string, std::vector<double>> columns;
    std::vector<std::string> order;
    if (fs::exists(out_path)) {
        const score_matrix prior = io::load_score_matrix(out_path, dataset_name);
        if (prior.n_samples() != incoming.n_samples()) {
            fail(errc::format_error, "import row count " +
                                         std::to_string(incoming.n_samples()) +
                                         " does not match existing " +
                                         std::to_string(prior.n_samples()));
        }
        for (std::size_t m = 0; m < prior.n_models(); ++m) {
            const auto col = prior.column(m);
            columns[prior.model_id(m)] = {col.begin(), col.end()};
            order.push_back(prior.model_id(m));
        }
    }
    for (std::size_t m = 0; m < incoming.n_models(); ++m) {
        const auto col = incoming.column(m);
        if (columns.find(incoming.model_id(m)) == columns.end()) {
            order.push_back(incoming.model_id(m));
        }
        columns[incoming.model_id(m)] = {col.begin(), col.end()};
    }

    // stable slot order: full default enumeration first, extras afterwards
    std::vector<std::string> final_order;
    std::set<std::string> placed;
    for (const auto& spec : detectors::enumerate_model_pool(detectors::pool_config{})) {
        const std::string id = spec.id();
        if (columns.count(id) != 0) {
            final_order.push_back(id);
            placed.insert(id);
        }
    }
    for (const std::string& id : order) {
        if (placed.count(id) == 0) final_order.push_back(id);
    }

    score_matrix merged(dataset_name, incoming.n_samples());
    for (const std::string& id : final_order) merged.add_column(id, columns[id]);
    io::save_score_matrix(out_path, merged);
}

void cmd_select(const run_config& config) {
    validate_metrics(config.metrics);
    for (const std::string& name : config.strategies) {
        if (!strategy_known(name)) fail(errc::config_error, "unknown strategy '" + name + "'");
    }

    std::vector<std::string> selection_lines;
    {
        std::vector<std::string> header{"dataset",     "strategy",  "selected_model",
                                        "internal_value", "orientation", "converged"};
        for (const std::string& m : config.metrics) header.push_back(m);
        selection_lines.push_back(io::join_csv(header));
    }
    std::vector<std::string> perf_lines;
    {
        std::vector<std::string> header{"dataset", "model_id"};
        for (const std::string& m : config.metrics) header.push_back(m);
        perf_lines.push_back(io::join_csv(header));
    }
    bool any_labeled = false;

    for (const fs::path& path : config.datasets) {
        const dataset_bundle ds = io::load_dataset(path);
        const fs::path sp = scores_path(config, ds.name);
        if (!fs::exists(sp)) {
            fail(errc::io_error, "no score matrix for '" + ds.name + "'; run run-pool first");
        }
        const score_matrix scores = io::load_score_matrix(sp, ds.name);
        strategy_context ctx(scores, &ds, config.params, config.seed);

        if (ds.has_labels()) {
            any_labeled = true;
            for (std::size_t m = 0; m < scores.n_models(); ++m) {
                std::vector<std::string> fields{ds.name, scores.model_id(m)};
                for (const std::string& metric : config.metrics) {
                    fields.push_back(io::format_double(metric_value(
                        metric, scores.column(m), *ds.labels, ds.n_outliers)));
                }
                perf_lines.push_back(io::join_csv(fields));
            }
        }

        std::vector<std::string> measure_lines{"strategy,model_id,value,excluded"};
        for (const std::string& name : config.strategies) {
            const strategy_verdict v = run_strategy(name, ctx);

            for (std::size_t m = 0; m < v.measure.size(); ++m) {
                measure_lines.push_back(io::join_csv(
                    {name, scores.model_id(m), io::format_double(v.measure[m]),
                     (!v.excluded.empty() && v.excluded[m]) ? "1" : "0"}));
            }
            if (v.aggregate_scores) {
                std::vector<std::string> agg_lines{"sample_id,score"};
                for (std::size_t j = 0; j < v.aggregate_scores->size(); ++j) {
                    agg_lines.push_back(io::join_csv(
                        {std::to_string(j), io::format_double((*v.aggregate_scores)[j])}));
                }
                io::write_lines(config.out_dir / "aggregates" /
                                    (ds.name + "." + name + ".csv"),
                                agg_lines);
            }

            std::vector<std::string> fields{ds.name, name};
            if (v.selected) {
                fields.push_back(scores.model_id(*v.selected));
                fields.push_back(io::format_double(v.measure[*v.selected]));
            } else {
                fields.push_back("(aggregate)");
                fields.push_back("");
            }
            fields.push_back(v.orient == standalone::orientation::lower_better
                                 ? "lower-better"
                                 : "higher-better");
            fields.push_back(v.converged ? "1" : "0");
            for (const std::string& metric : config.metrics) {
                if (!ds.has_labels()) {
                    fields.push_back("");
                    continue;
                }
                const std::span<const double> col =
                    v.selected ? scores.column(*v.selected)
                               : std::span<const double>(*v.aggregate_scores);
                fields.push_back(io::format_double(
                    metric_value(metric, col, *ds.labels, ds.n_outliers)));
            }
            selection_lines.push_back(io::join_csv(fields));
        }
        io::write_lines(config.out_dir / "measures" / (ds.name + ".csv"), measure_lines);
    }

    io::write_lines(config.out_dir / "selection.csv", selection_lines);
    if (any_labeled) io::write_lines(config.out_dir / "model_perf.csv", perf_lines);
}

void cmd_compare(const run_config& config) {
    validate_metrics(config.metrics);
    const io::csv_table selection = io::read_csv(config.out_dir / "selection.csv");
    const labeled_pool_perf pool = read_model_perf(config);

    const std::size_t ds_col = selection.column_index("dataset");
    const std::size_t strat_col = selection.column_index("strategy");

    std::vector<std::string> methods;
    for (const auto& row : selection.rows) {
        if (std::find(methods.begin(), methods.end(), row[strat_col]) == methods.end()) {
            methods.push_back(row[strat_col]);
        }
    }
    if (methods.size() < 2) {
        fail(errc::not_enough_data, "compare needs selection reports for >= 2 methods");
    }
    if (pool.datasets.size() < 5) {
        fail(errc::not_enough_data, "compare needs >= 5 labeled datasets, have " +
                                        std::to_string(pool.datasets.size()));
    }

    for (const std::string& metric : config.metrics) {
        const std::size_t metric_col = selection.column_index(metric);

        std::map<std::string, std::map<std::string, double>> by_method;
        for (const auto& row : selection.rows) {
            if (row[metric_col].empty()) continue;
            by_method[row[strat_col]][row[ds_col]] =
                io::parse_double(row[metric_col], "selection.csv");
        }

        comparison_output cmp;
        cmp.table.datasets = pool.datasets;
        const auto& pool_values = pool.values.at(metric);

        cmp.random_baseline.resize(pool.datasets.size());
        std::vector<double> iforest(pool.datasets.size());
        bool have_iforest = true;
        std::vector<double> best(pool.datasets.size());
        for (std::size_t t = 0; t < pool.datasets.size(); ++t) {
            const auto& vals = pool_values.at(pool.datasets[t]);
            const auto& ids = pool.models.at(pool.datasets[t]);
            double acc = 0.0, fam_acc = 0.0;
            std::size_t fam_n = 0;
            double mx = vals.front();
            for (std::size_t m = 0; m < vals.size(); ++m) {
                acc += vals[m];
                mx = std::max(mx, vals[m]);
                if (detectors::family_of_model_id(ids[m]) == "iforest") {
                    fam_acc += vals[m];
                    ++fam_n;
                }
            }
            cmp.random_baseline[t] = acc / static_cast<double>(vals.size());
            if (fam_n == 0) have_iforest = false;
            else iforest[t] = fam_acc / static_cast<double>(fam_n);
            best[t] = mx;

            std::vector<double> sorted(vals);
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            cmp.sorted_model_perf.push_back(std::move(sorted));
        }
        if (have_iforest) cmp.iforest_baseline = iforest;
        cmp.best_model = best;

        std::vector<std::string> usable;
        for (const std::string& m : methods) {
            const auto it = by_method.find(m);
            if (it == by_method.end()) continue;
            bool complete = true;
            for (const std::string& ds : pool.datasets) {
                complete = complete && it->second.count(ds) != 0;
            }
            if (complete) usable.push_back(m);
        }

        cmp.table.methods = usable;
        cmp.table.methods.push_back("random");
        if (have_iforest) cmp.table.methods.push_back("iforest-r");
        cmp.table.values = matrix(pool.datasets.size(), cmp.table.methods.size());
        for (std::size_t t = 0; t < pool.datasets.size(); ++t) {
            for (std::size_t m = 0; m < usable.size(); ++m) {
                cmp.table.values(t, m) = by_method[usable[m]][pool.datasets[t]];
            }
            cmp.table.values(t, usable.size()) = cmp.random_baseline[t];
            if (have_iforest) cmp.table.values(t, usable.size() + 1) = iforest[t];
        }
        write_comparison(config, metric, cmp);
    }
}

void cmd_compare_fixture(const run_config& config, const fs::path& perf_csv,
                         bool family_pool_weights, const std::string& metric_label) {
    const eval::perf_table table = io::load_perf_table(perf_csv);
    if (table.datasets.size() < 5) {
        fail(errc::not_enough_data, "compare needs >= 5 datasets in the table");
    }

    comparison_output cmp;
    cmp.table = table;

    if (family_pool_weights) {
        std::map<std::string, std::size_t> weights;
        for (const std::string& name : table.methods) {
            weights[name] =
                detectors::default_family_pool_size(detectors::family_from_name(name));
        }
        cmp.random_baseline = eval::weighted_family_mean(table, weights);
    } else {
        cmp.random_baseline = eval::baseline_random(table);
    }

    for (std::size_t m = 0; m < table.methods.size(); ++m) {
        if (table.methods[m] == "iforest") cmp.iforest_baseline = table.column(m);
    }
    for (std::size_t t = 0; t < table.datasets.size(); ++t) {
        std::vector<double> sorted(table.methods.size());
        for (std::size_t m = 0; m < table.methods.size(); ++m) sorted[m] = table.values(t, m);
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        cmp.sorted_model_perf.push_back(std::move(sorted));
    }

    cmp.table.methods.push_back("random");
    cmp.table.values = matrix(table.datasets.size(), table.methods.size() + 1);
    for (std::size_t t = 0; t < table.datasets.size(); ++t) {
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            cmp.table.values(t, m) = table.values(t, m);
        }
        cmp.table.values(t, table.methods.size()) = cmp.random_baseline[t];
    }
    write_comparison(config, metric_label, cmp);
}

void cmd_report(const run_config& config) {
    validate_metrics(config.metrics);
    const labeled_pool_perf pool = read_model_perf(config);

    std::vector<std::string> emitted;
    for (const std::string& metric : config.metrics) {
        const auto& pool_values = pool.values.at(metric);

        const std::vector<std::string> families =
            family_roster(pool.models.at(pool.datasets.front()));
        eval::perf_table family_means;
        family_means.datasets = pool.datasets;
        family_means.methods = families;
        family_means.values = matrix(pool.datasets.size(), families.size());
        for (std::size_t t = 0; t < pool.datasets.size(); ++t) {
            const auto& ids = pool.models.at(pool.datasets[t]);
            const auto& vals = pool_values.at(pool.datasets[t]);
            for (std::size_t f = 0; f < families.size(); ++f) {
                double acc = 0.0;
                std::size_t count = 0;
                for (std::size_t m = 0; m < ids.size(); ++m) {
                    if (detectors::family_of_model_id(ids[m]) == families[f]) {
                        acc += vals[m];
                        ++count;
                    }
                }
                family_means.values(t, f) =
                    count > 0 ? acc / static_cast<double>(count) : 0.0;
            }
        }
        const fs::path fam_path = config.out_dir / "report" / ("familywise_" + metric + ".csv");
        write_familywise(fam_path, family_means);
        emitted.push_back(fam_path.filename().string());

        std::vector<std::string> spread_lines{"dataset,min,q1,median,q3,max"};
        for (const std::string& ds : pool.datasets) {
            std::vector<double> vals = pool_values.at(ds);
            std::sort(vals.begin(), vals.end());
            spread_lines.push_back(io::join_csv({ds, io::format_double(vals.front()),
                                                 io::format_double(quantile(vals, 0.25)),
                                                 io::format_double(quantile(vals, 0.5)),
                                                 io::format_double(quantile(vals, 0.75)),
                                                 io::format_double(vals.back())}));
        }
        const fs::path spread_path =
            config.out_dir / "report" / ("dataset_model_perf_" + metric + ".csv");
        io::write_lines(spread_path, spread_lines);
        emitted.push_back(spread_path.filename().string());
    }

    std::vector<std::string> md;
    md.push_back("# Benchmark report");
    md.push_back("");
    md.push_back("Datasets with labels: " + std::to_string(pool.datasets.size()));
    md.push_back("Models scored: " +
                 std::to_string(pool.models.at(pool.datasets.front()).size()));
    md.push_back("");
    md.push_back("## Emitted tables");
    md.push_back("");
    for (const std::string& f : emitted) {
        md.push_back("- `report/" + f + "`");
    }
    md.push_back("");
    md.push_back("Family-wise tables carry one row per dataset, the per-family mean of the");
    md.push_back("chosen metric, and the winning family (ties joined with `|`). The spread");
    md.push_back("tables list min/q1/median/q3/max of per-model performance per dataset,");
    md.push_back("ready for boxplots. Comparison grids live under `compare/`.");
    io::write_lines(config.out_dir / "report" / "report.md", md);
}

void cmd_report_fixture(const run_config& config, const fs::path& family_csv,
                        const std::string& metric_label) {
    const eval::perf_table table = io::load_perf_table(family_csv);
    write_familywise(config.out_dir / "report" / ("familywise_" + metric_label + ".csv"),
                     table);
}

} // namespace uoms::run
