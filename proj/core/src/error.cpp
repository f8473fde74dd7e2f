#include "uoms/error.hpp"

namespace uoms {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::degenerate_ranking: return "DegenerateRanking";
    case errc::degenerate_labels: return "DegenerateLabels";
    case errc::degenerate_model: return "DegenerateModel";
    case errc::bad_hyperparameter: return "BadHyperparameter";
    case errc::bad_k: return "BadK";
    case errc::config_error: return "ConfigError";
    case errc::io_error: return "IoError";
    case errc::format_error: return "FormatError";
    case errc::not_enough_data: return "NotEnoughData";
    case errc::separability_failure: return "SeparabilityFailure";
    case errc::numerical_failure: return "NumericalFailure";
    }
    return "UnknownError";
}

} // namespace uoms
