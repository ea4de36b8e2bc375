#include "dendrowave/corranal.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace dendrowave {

ContingencyTable::ContingencyTable(const DataMatrix& mat) {
    const std::size_t n = mat.rows(), m = mat.cols();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (mat(i, j) < 0.0)
                fail(errc::invalid_argument, "contingency table entries must be non-negative");

    // drop all-zero columns before analysis
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < n && !nonzero; ++i) nonzero = mat(i, j) > 0.0;
        if (nonzero) keep.push_back(j);
    }
    if (keep.empty()) fail(errc::zero_mass_row, "table has no non-zero column");

    rows_ = n;
    cols_ = keep.size();
    values_.resize(rows_ * cols_);
    col_labels_.reserve(cols_);
    for (std::size_t jj = 0; jj < cols_; ++jj) col_labels_.push_back(mat.col_labels()[keep[jj]]);
    row_labels_ = mat.row_labels();

    total_ = 0.0;
    row_mass_.assign(rows_, 0.0);
    col_mass_.assign(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t jj = 0; jj < cols_; ++jj) {
            const double v = mat(i, keep[jj]);
            values_[i * cols_ + jj] = v;
            total_ += v;
        }
    if (total_ <= 0.0) fail(errc::zero_mass_row, "table grand total must be positive");
    for (std::size_t i = 0; i < rows_; ++i) {
        double rm = 0.0;
        for (std::size_t jj = 0; jj < cols_; ++jj) rm += values_[i * cols_ + jj];
        if (rm <= 0.0)
            fail(errc::zero_mass_row,
                 "row \"" + row_labels_[i] + "\" has zero mass");
        row_mass_[i] = rm / total_;
    }
    for (std::size_t jj = 0; jj < cols_; ++jj) {
        double cm = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) cm += values_[i * cols_ + jj];
        col_mass_[jj] = cm / total_;
    }
}

double chi2_distance(const ContingencyTable& t, std::size_t i, std::size_t j) {
    if (i >= t.rows() || j >= t.rows())
        fail(errc::invalid_argument, "row index out of range");
    double d2 = 0.0;
    for (std::size_t c = 0; c < t.cols(); ++c) {
        const double pi = t(i, c) / t.grand_total() / t.row_masses()[i];
        const double pj = t(j, c) / t.grand_total() / t.row_masses()[j];
        const double diff = pi - pj;
        d2 += diff * diff / t.col_masses()[c];
    }
    return d2;
}

DataMatrix double_columns(const DataMatrix& mat, DoublingMode mode) {
    const std::size_t n = mat.rows(), m = mat.cols();
    double table_max = mat(0, 0);
    std::vector<double> col_max(m);
    for (std::size_t j = 0; j < m; ++j) {
        double hi = mat(0, j);
        for (std::size_t i = 1; i < n; ++i) hi = std::max(hi, mat(i, j));
        col_max[j] = hi;
        table_max = std::max(table_max, hi);
    }

    std::vector<double> out(n * 2 * m);
    std::vector<std::string> col_labels;
    col_labels.reserve(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        const double hi = mode == DoublingMode::column_max ? col_max[j] : table_max;
        for (std::size_t i = 0; i < n; ++i) {
            out[i * 2 * m + 2 * j] = mat(i, j);
            out[i * 2 * m + 2 * j + 1] = hi - mat(i, j);
        }
        col_labels.push_back(mat.col_labels()[j]);
        col_labels.push_back(mat.col_labels()[j] + "'");
    }
    return DataMatrix(n, 2 * m, std::move(out), mat.row_labels(), std::move(col_labels));
}

FactorEmbedding correspondence_analysis(const ContingencyTable& t, bool allow_degenerate) {
    const std::size_t n = t.rows(), m = t.cols();

    // standardized residuals S_ij = (p_ij - r_i c_j) / sqrt(r_i c_j)
    Eigen::MatrixXd S(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double p = t(i, j) / t.grand_total();
            const double rc = t.row_masses()[i] * t.col_masses()[j];
            S(i, j) = (p - rc) / std::sqrt(rc);
        }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    const double lambda_max = sv.size() > 0 ? sv(0) * sv(0) : 0.0;
    FactorEmbedding out;
    out.row_labels = t.row_labels();
    out.col_labels = t.col_labels();
    if (lambda_max <= 1e-24) {
        if (!allow_degenerate)
            fail(errc::degenerate_table, "all row profiles are proportional; no factors");
        return out;
    }

    const std::size_t max_factors = std::min(n, m) - 1;
    std::size_t k = 0;
    for (Eigen::Index f = 0; f < sv.size() && k < max_factors; ++f) {
        const double lambda = sv(f) * sv(f);
        if (lambda <= 1e-12 * lambda_max) break;
        out.eigenvalues.push_back(lambda);
        ++k;
    }
    if (k == 0) {
        if (!allow_degenerate)
            fail(errc::degenerate_table, "all row profiles are proportional; no factors");
        return out;
    }

    out.row_coords.assign(n, std::vector<double>(k));
    out.col_coords.assign(m, std::vector<double>(k));
    for (std::size_t f = 0; f < k; ++f) {
        Eigen::VectorXd u = svd.matrixU().col(f);
        Eigen::VectorXd v = svd.matrixV().col(f);
        // deterministic sign: largest-magnitude row coordinate made positive
        Eigen::Index imax = 0;
        u.cwiseAbs().maxCoeff(&imax);
        if (u(imax) < 0.0) {
            u = -u;
            v = -v;
        }
        const double sigma = sv(f);
        for (std::size_t i = 0; i < n; ++i)
            out.row_coords[i][f] = sigma * u(i) / std::sqrt(t.row_masses()[i]);
        for (std::size_t j = 0; j < m; ++j)
            out.col_coords[j][f] = sigma * v(j) / std::sqrt(t.col_masses()[j]);
    }
    return out;
}

} // namespace dendrowave
