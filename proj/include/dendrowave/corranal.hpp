#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dendrowave/core.hpp"

namespace dendrowave {

/// Non-negative frequency table with row/column masses. All-zero columns are
/// dropped at construction (before any analysis); an all-zero row is an error.
class ContingencyTable {
public:
    explicit ContingencyTable(const DataMatrix& mat);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

    double grand_total() const noexcept { return total_; }
    const std::vector<double>& row_masses() const noexcept { return row_mass_; }
    const std::vector<double>& col_masses() const noexcept { return col_mass_; }
    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

private:
    std::size_t rows_, cols_;
    std::vector<double> values_;
    std::vector<double> row_mass_, col_mass_;
    double total_;
    std::vector<std::string> row_labels_, col_labels_;
};

/// Squared chi-squared distance between the profiles of rows i and j:
/// sum_c (1/col_mass_c) * (p_ic/r_i - p_jc/r_j)^2.
double chi2_distance(const ContingencyTable& t, std::size_t i, std::size_t j);

enum class DoublingMode { column_max, table_max };

/// Append the complement of each column (max - value); the output has 2m
/// columns. With column_max the complement uses each column's own maximum,
/// which equalizes row masses; table_max uses the global maximum.
DataMatrix double_columns(const DataMatrix& mat, DoublingMode mode = DoublingMode::column_max);

/// Euclidean embedding of the row/column profiles under the chi-squared
/// metric. Full-factor row distances reproduce chi2_distance.
struct FactorEmbedding {
    std::vector<double> eigenvalues;            // descending, > 0
    std::vector<std::vector<double>> row_coords; // n x k principal coordinates
    std::vector<std::vector<double>> col_coords; // m x k principal coordinates
    std::vector<std::string> row_labels, col_labels;

    std::size_t factors() const noexcept { return eigenvalues.size(); }
};

/// Eigendecomposition of the centered profile matrix. Eigenvalues below
/// 1e-12 * lambda_max are dropped, and at most min(n,m)-1 factors are kept
/// (the centering consumes one dimension). A rank-zero table (all rows
/// proportional) raises degenerate_table unless allow_degenerate, in which
/// case an empty embedding is returned.
FactorEmbedding correspondence_analysis(const ContingencyTable& t,
                                        bool allow_degenerate = false);

} // namespace dendrowave
