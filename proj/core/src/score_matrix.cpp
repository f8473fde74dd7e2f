#include "uoms/score_matrix.hpp"

#include <cmath>
#include <limits>

#include "uoms/error.hpp"

namespace uoms {

void score_matrix::add_column(const std::string& model_id, std::span<const double> scores) {
    if (scores.size() != n_samples_) {
        fail(errc::shape_mismatch, "column '" + model_id + "' has wrong length");
    }

    double finite_min = std::numeric_limits<double>::infinity();
    std::size_t replaced = 0;
    for (double s : scores) {
        if (std::isfinite(s)) finite_min = std::min(finite_min, s);
    }
    if (!std::isfinite(finite_min)) finite_min = 0.0; // nothing finite at all

    const std::size_t base = data_.size();
    data_.resize(base + n_samples_);
    for (std::size_t j = 0; j < n_samples_; ++j) {
        double s = scores[j];
        if (!std::isfinite(s)) {
            s = finite_min;
            ++replaced;
        }
        data_[base + j] = s;
    }

    bool constant = true;
    for (std::size_t j = 1; j < n_samples_ && constant; ++j) {
        constant = data_[base + j] == data_[base];
    }

    model_ids_.push_back(model_id);
    degenerate_.push_back(constant);
    replaced_.push_back(replaced);
}

std::size_t score_matrix::index_of(const std::string& model_id) const {
    for (std::size_t i = 0; i < model_ids_.size(); ++i) {
        if (model_ids_[i] == model_id) return i;
    }
    fail(errc::config_error, "model '" + model_id + "' not in matrix");
}

} // namespace uoms
