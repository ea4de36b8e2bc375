#pragma once

#include <stdexcept>
#include <string>

namespace dendrowave {

/// Error categories surfaced by the library. The CLI maps input errors to
/// exit code 2 and numeric/degeneracy errors to exit code 3.
enum class errc {
    non_rectangular,
    non_numeric_cell,
    duplicate_label,
    zero_range_column,
    too_few_rows,
    shape_mismatch,
    leaf_not_found,
    depth_out_of_range,
    zero_mass_row,
    degenerate_table,
    empty_corpus,
    unknown_term,
    too_long,
    not_a_permutation,
    length_mismatch,
    non_integer_transform,
    non_rank_input,
    invalid_argument,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

    /// True for malformed/unreadable input, false for numeric degeneracies.
    bool is_input_error() const noexcept {
        switch (code_) {
        case errc::zero_range_column:
        case errc::degenerate_table:
        case errc::non_integer_transform:
        case errc::non_rank_input:
            return false;
        default:
            return true;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

const char* errc_name(errc code) noexcept;

} // namespace dendrowave
