#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dendrowave/common.hpp"

namespace dendrowave {

/// Immutable n x m matrix of finite reals with unique row/column labels.
/// Labels default to "1".."n" / "1".."m" when not supplied.
class DataMatrix {
public:
    DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::vector<std::string> row_labels = {},
               std::vector<std::string> col_labels = {});

    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                std::vector<std::string> row_labels = {},
                                std::vector<std::string> col_labels = {});

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t i, std::size_t j) const {
        return values_[i * cols_ + j];
    }
    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    const std::vector<double>& values() const noexcept { return values_; }

    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

    /// True when every cell is integral (used by the integer transform paths).
    bool is_integral() const noexcept;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;         // row-major
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

/// Non-negative observation masses; at least one must be positive.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> masses);

    /// Unit mass per observation.
    static WeightVector constant(std::size_t n);

    std::size_t size() const noexcept { return masses_.size(); }
    double operator[](std::size_t i) const { return masses_[i]; }
    const std::vector<double>& masses() const noexcept { return masses_; }

private:
    std::vector<double> masses_;
};

/// Parse a rectangular table of numeric strings into a DataMatrix.
/// Errors: non_rectangular, non_numeric_cell, duplicate_label.
DataMatrix validate_matrix(const std::vector<std::vector<std::string>>& raw,
                           std::vector<std::string> row_labels = {},
                           std::vector<std::string> col_labels = {});

/// Per-column (x - min) / (max - min). Every output column spans [0, 1].
/// A constant column is an error (zero_range_column), reported with its label.
DataMatrix range_normalize(const DataMatrix& mat);

struct CsvOptions {
    bool header = true;      // first row holds column labels
    bool row_labels = false; // first column holds row labels
};

DataMatrix read_csv(std::istream& in, const CsvOptions& opts = {});
DataMatrix read_csv_file(const std::string& path, const CsvOptions& opts = {});

/// Writes labels + values; `precision` is the significant-digit count
/// (0 means shortest round-trip form).
std::string to_csv(const DataMatrix& mat, int precision = 0);

/// Locale-independent double formatting. precision 0 = shortest round-trip,
/// otherwise %.*g-style with `precision` significant digits.
std::string format_double(double value, int precision = 0);

} // namespace dendrowave
