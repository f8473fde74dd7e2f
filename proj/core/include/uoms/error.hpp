#pragma once

#include <stdexcept>
#include <string>

namespace uoms {

enum class errc {
    empty_input,
    shape_mismatch,
    degenerate_ranking,
    degenerate_labels,
    degenerate_model,
    bad_hyperparameter,
    bad_k,
    config_error,
    io_error,
    format_error,
    not_enough_data,
    separability_failure,
    numerical_failure,
};

const char* errc_name(errc code) noexcept;

// Every recoverable failure in the library throws this; the CLI maps
// codes to process exit codes (config -> 2, data -> 3, numerical -> 4).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace uoms
