#pragma once

#include <filesystem>

#include "uoms/dataset.hpp"
#include "uoms/eval/perf_table.hpp"
#include "uoms/score_matrix.hpp"

namespace uoms::io {

// Dataset CSV: header row, feature columns, optional final column `label`
// holding 0/1. The dataset name is the file stem.
dataset_bundle load_dataset(const std::filesystem::path& path);

// Score-matrix CSV: first column `sample_id` (0..n-1), one column per
// model id of the form family|hp1=v|hp2=v.
score_matrix load_score_matrix(const std::filesystem::path& path,
                               const std::string& dataset_id);
void save_score_matrix(const std::filesystem::path& path, const score_matrix& scores);

// Perf-table CSV: first column `dataset`, one column per method.
eval::perf_table load_perf_table(const std::filesystem::path& path);
void save_perf_table(const std::filesystem::path& path, const eval::perf_table& table);

} // namespace uoms::io
