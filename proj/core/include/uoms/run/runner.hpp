#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "uoms/detectors/model_spec.hpp"
#include "uoms/run/strategies.hpp"

namespace uoms::run {

// One declarative run; the seed fully determines every stochastic detector
// and strategy, so identical configs produce byte-identical artifacts.
struct run_config {
    std::vector<std::filesystem::path> datasets;
    std::filesystem::path out_dir = "uoms_out";
    detectors::pool_config pool;
    std::vector<std::string> strategies = default_strategy_names();
    std::vector<std::string> metrics = {"ap", "roc", "prec_at_k"};
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    strategy_params params;
};

void validate_metrics(const std::vector<std::string>& metrics);

// inspect: dataset manifest (name, points, dims, outlier %); returns the
// emitted lines for console echo.
std::vector<std::string> cmd_inspect(const run_config& config);

// run-pool: one score CSV per dataset plus run_report.csv. Existing
// columns are reused, so interrupted runs resume to the same bytes.
void cmd_run_pool(const run_config& config);

// import-scores: merge externally produced columns (e.g. the OCSVM grid)
// into a dataset's score CSV, keeping pool enumeration order.
void cmd_import_scores(const run_config& config, const std::filesystem::path& csv,
                       const std::string& family, const std::string& dataset_name);

// select: per (dataset, strategy) verdicts, per-model measures, aggregate
// rankings, and per-model performance for labeled datasets.
void cmd_select(const run_config& config);

// compare: pairwise one-sided Wilcoxon grid, baseline comparisons, q-th
// best analysis, and per-dataset differences against iForest-r.
void cmd_compare(const run_config& config);
// Same harness fed from an imported performance table (columns = methods
// or detector families); with family_pool_weights the Random baseline is
// the pool-slot weighted family mean.
void cmd_compare_fixture(const run_config& config, const std::filesystem::path& perf_csv,
                         bool family_pool_weights, const std::string& metric_label = "ap");

// report: family-wise mean tables with per-dataset winners, per-dataset
// model-performance spread, and a Markdown index of the run.
void cmd_report(const run_config& config);
void cmd_report_fixture(const run_config& config, const std::filesystem::path& family_csv,
                        const std::string& metric_label = "ap");

} // namespace uoms::run
