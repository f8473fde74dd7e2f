#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace uoms {

// n_samples x n_models outlier scores for one dataset, column-major so a
// model's column is contiguous. Orientation contract: higher score means
// more anomalous, for every column.
class score_matrix {
public:
    score_matrix() = default;
    score_matrix(std::string dataset_id, std::size_t n_samples)
        : dataset_id_(std::move(dataset_id)), n_samples_(n_samples) {}

    // Appends one model column. Non-finite entries are replaced by the
    // column's finite minimum (least anomalous) and counted; a column with
    // fewer than two distinct values is flagged degenerate.
    void add_column(const std::string& model_id, std::span<const double> scores);

    const std::string& dataset_id() const noexcept { return dataset_id_; }
    std::size_t n_samples() const noexcept { return n_samples_; }
    std::size_t n_models() const noexcept { return model_ids_.size(); }

    std::span<const double> column(std::size_t i) const {
        return {data_.data() + i * n_samples_, n_samples_};
    }
    std::span<double> column(std::size_t i) {
        return {data_.data() + i * n_samples_, n_samples_};
    }

    const std::vector<std::string>& model_ids() const noexcept { return model_ids_; }
    const std::string& model_id(std::size_t i) const { return model_ids_[i]; }
    std::size_t index_of(const std::string& model_id) const; // throws ConfigError

    bool degenerate(std::size_t i) const { return degenerate_[i]; }
    std::size_t replaced_non_finite(std::size_t i) const { return replaced_[i]; }

private:
    std::string dataset_id_;
    std::size_t n_samples_ = 0;
    std::vector<double> data_;
    std::vector<std::string> model_ids_;
    std::vector<bool> degenerate_;
    std::vector<std::size_t> replaced_;
};

} // namespace uoms
