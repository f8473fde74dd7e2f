#include "uoms/detectors/zoo.hpp"

#include "uoms/error.hpp"

namespace uoms::detectors {
namespace {

std::size_t hp_uint(const hyperparameter& hp) {
    const double v = hp.as_number();
    if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
        fail(errc::bad_hyperparameter, hp.name + "=" + hp.value + " must be a whole number");
    }
    return static_cast<std::size_t>(v);
}

knn_method knn_method_from_name(const std::string& name) {
    if (name == "largest") return knn_method::largest;
    if (name == "mean") return knn_method::mean;
    if (name == "median") return knn_method::median;
    fail(errc::config_error, "unknown knn method '" + name + "'");
}

} // namespace

std::vector<double> fit_score(const model_spec& spec, const matrix& X, double minkowski_p) {
    switch (spec.algo) {
    case family::lof:
        return lof_score(X, hp_uint(spec.hp1), metric_from_name(spec.hp2->value), minkowski_p);
    case family::knn:
        return knn_score(X, hp_uint(spec.hp1), knn_method_from_name(spec.hp2->value));
    case family::cof:
        return cof_score(X, hp_uint(spec.hp1));
    case family::abod:
        return abod_score(X, hp_uint(spec.hp1));
    case family::iforest:
        return iforest_score(X, hp_uint(spec.hp1), spec.hp2->as_number(), spec.seed);
    case family::hbos:
        return hbos_score(X, hp_uint(spec.hp1), spec.hp2->as_number());
    case family::loda:
        return loda_score(X, hp_uint(spec.hp1), hp_uint(*spec.hp2), spec.seed);
    case family::ocsvm:
        fail(errc::config_error,
             "ocsvm slots are import-only; use import-scores to fill them");
    }
    fail(errc::config_error, "unhandled detector family");
}

} // namespace uoms::detectors
