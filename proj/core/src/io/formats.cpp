#include "uoms/io/formats.hpp"

#include "uoms/detectors/model_spec.hpp"
#include "uoms/io/csv.hpp"

namespace uoms::io {

dataset_bundle load_dataset(const std::filesystem::path& path) {
    const csv_table table = read_csv(path);
    if (table.rows.empty()) fail(errc::format_error, "'" + path.string() + "' has no rows");

    dataset_bundle ds;
    ds.name = path.stem().string();

    const bool labeled = !table.header.empty() && table.header.back() == "label";
    const std::size_t d = table.header.size() - (labeled ? 1 : 0);
    if (d == 0) fail(errc::format_error, "'" + path.string() + "' has no feature columns");

    ds.X = matrix(table.rows.size(), d);
    if (labeled) ds.labels.emplace(table.rows.size(), 0);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            ds.X(r, c) = parse_double(table.rows[r][c], path.string());
        }
        if (labeled) {
            const std::string& tok = table.rows[r][d];
            if (tok != "0" && tok != "1") {
                fail(errc::format_error, "label '" + tok + "' in '" + path.string() +
                                             "' must be 0 or 1");
            }
            (*ds.labels)[r] = tok == "1" ? 1 : 0;
            ds.n_outliers += static_cast<std::size_t>(tok == "1");
        }
    }
    ds.validate();
    return ds;
}

score_matrix load_score_matrix(const std::filesystem::path& path,
                               const std::string& dataset_id) {
    const csv_table table = read_csv(path);
    if (table.header.empty() || table.header.front() != "sample_id") {
        fail(errc::format_error, "'" + path.string() + "' must start with sample_id");
    }
    if (table.rows.empty()) fail(errc::format_error, "'" + path.string() + "' has no rows");

    score_matrix scores(dataset_id, table.rows.size());
    std::vector<double> column(table.rows.size());
    for (std::size_t m = 1; m < table.header.size(); ++m) {
        detectors::parse_model_id(table.header[m]); // validates the id format
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            column[r] = parse_double(table.rows[r][m], path.string());
        }
        scores.add_column(table.header[m], column);
    }
    return scores;
}

void save_score_matrix(const std::filesystem::path& path, const score_matrix& scores) {
    std::vector<std::string> lines;
    lines.reserve(scores.n_samples() + 1);

    std::vector<std::string> fields;
    fields.push_back("sample_id");
    for (const std::string& id : scores.model_ids()) fields.push_back(id);
    lines.push_back(join_csv(fields));

    for (std::size_t r = 0; r < scores.n_samples(); ++r) {
        fields.clear();
        fields.push_back(std::to_string(r));
        for (std::size_t m = 0; m < scores.n_models(); ++m) {
            fields.push_back(format_double(scores.column(m)[r]));
        }
        lines.push_back(join_csv(fields));
    }
    write_lines(path, lines);
}

eval::perf_table load_perf_table(const std::filesystem::path& path) {
    const csv_table table = read_csv(path);
    if (table.header.empty() || table.header.front() != "dataset") {
        fail(errc::format_error, "'" + path.string() + "' must start with a dataset column");
    }
    eval::perf_table perf;
    perf.methods.assign(table.header.begin() + 1, table.header.end());
    perf.values = matrix(table.rows.size(), perf.methods.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        perf.datasets.push_back(table.rows[r][0]);
        for (std::size_t m = 0; m < perf.methods.size(); ++m) {
            perf.values(r, m) = parse_double(table.rows[r][m + 1], path.string());
        }
    }
    perf.validate();
    return perf;
}

void save_perf_table(const std::filesystem::path& path, const eval::perf_table& table) {
    std::vector<std::string> lines;
    std::vector<std::string> fields;
    fields.push_back("dataset");
    for (const std::string& m : table.methods) fields.push_back(m);
    lines.push_back(join_csv(fields));
    for (std::size_t t = 0; t < table.datasets.size(); ++t) {
        fields.clear();
        fields.push_back(table.datasets[t]);
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            fields.push_back(format_double(table.values(t, m)));
        }
        lines.push_back(join_csv(fields));
    }
    write_lines(path, lines);
}

} // namespace uoms::io
