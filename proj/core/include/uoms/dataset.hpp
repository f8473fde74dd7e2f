#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uoms/error.hpp"
#include "uoms/matrix.hpp"

namespace uoms {

// One detection task: feature matrix, optional 0/1 labels, and the
// ground-truth outlier count used by the split-based strategies.
struct dataset_bundle {
    std::string name;
    matrix X;
    std::optional<std::vector<int>> labels;
    std::size_t n_outliers = 0;

    std::size_t n_samples() const noexcept { return X.rows(); }
    std::size_t n_features() const noexcept { return X.cols(); }
    bool has_labels() const noexcept { return labels.has_value(); }

    void validate() const {
        if (X.rows() < 2 || X.cols() < 1) {
            fail(errc::not_enough_data, "dataset '" + name + "' needs n >= 2, d >= 1");
        }
        if (labels) {
            if (labels->size() != X.rows()) {
                fail(errc::shape_mismatch, "label count != sample count");
            }
            std::size_t pos = 0;
            for (int y : *labels) {
                if (y != 0 && y != 1) fail(errc::format_error, "labels must be 0/1");
                pos += static_cast<std::size_t>(y);
            }
            if (pos != n_outliers) fail(errc::format_error, "o_t != sum of labels");
            if (pos == 0 || pos == X.rows()) {
                fail(errc::degenerate_labels, "dataset '" + name + "' has one-class labels");
            }
        }
    }
};

} // namespace uoms
