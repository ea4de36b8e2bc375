#include "dendrowave/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace dendrowave {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::non_rectangular:       return "NonRectangular";
    case errc::non_numeric_cell:      return "NonNumericCell";
    case errc::duplicate_label:       return "DuplicateLabel";
    case errc::zero_range_column:     return "ZeroRangeColumn";
    case errc::too_few_rows:          return "TooFewRows";
    case errc::shape_mismatch:        return "ShapeMismatch";
    case errc::leaf_not_found:        return "LeafNotFound";
    case errc::depth_out_of_range:    return "DepthOutOfRange";
    case errc::zero_mass_row:         return "ZeroMassRow";
    case errc::degenerate_table:      return "DegenerateTable";
    case errc::empty_corpus:          return "EmptyCorpus";
    case errc::unknown_term:          return "UnknownTerm";
    case errc::too_long:              return "TooLong";
    case errc::not_a_permutation:     return "NotAPermutation";
    case errc::length_mismatch:       return "LengthMismatch";
    case errc::non_integer_transform: return "NonIntegerTransform";
    case errc::non_rank_input:        return "NonRankInput";
    case errc::invalid_argument:      return "InvalidArgument";
    case errc::io_error:              return "IoError";
    }
    return "UnknownError";
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

void check_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second)
            fail(errc::duplicate_label,
                 std::string("duplicate ") + what + " label: " + label);
    }
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                       std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels)
    : rows_(rows), cols_(cols), values_(std::move(values)),
      row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (rows_ < 1 || cols_ < 1)
        fail(errc::invalid_argument, "matrix must have at least one row and one column");
    if (values_.size() != rows_ * cols_)
        fail(errc::shape_mismatch, "value count does not match rows*cols");
    for (double v : values_)
        if (!std::isfinite(v))
            fail(errc::non_numeric_cell, "matrix cell is not finite");
    if (row_labels_.empty()) row_labels_ = default_labels(rows_);
    if (col_labels_.empty()) col_labels_ = default_labels(cols_);
    if (row_labels_.size() != rows_)
        fail(errc::shape_mismatch, "row label count does not match row count");
    if (col_labels_.size() != cols_)
        fail(errc::shape_mismatch, "column label count does not match column count");
    check_unique(row_labels_, "row");
    check_unique(col_labels_, "column");
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                 std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels) {
    if (rows.empty()) fail(errc::invalid_argument, "matrix must have at least one row");
    const std::size_t m = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * m);
    for (const auto& r : rows) {
        if (r.size() != m)
            fail(errc::non_rectangular, "rows have differing lengths");
        values.insert(values.end(), r.begin(), r.end());
    }
    return DataMatrix(rows.size(), m, std::move(values),
                      std::move(row_labels), std::move(col_labels));
}

bool DataMatrix::is_integral() const noexcept {
    for (double v : values_)
        if (v != std::floor(v)) return false;
    return true;
}

WeightVector::WeightVector(std::vector<double> masses) : masses_(std::move(masses)) {
    if (masses_.empty())
        fail(errc::invalid_argument, "weight vector must not be empty");
    double total = 0.0;
    for (double m : masses_) {
        if (!std::isfinite(m) || m < 0.0)
            fail(errc::invalid_argument, "weights must be finite and non-negative");
        total += m;
    }
    if (total <= 0.0)
        fail(errc::invalid_argument, "at least one weight must be positive");
}

WeightVector WeightVector::constant(std::size_t n) {
    return WeightVector(std::vector<double>(n, 1.0));
}

DataMatrix validate_matrix(const std::vector<std::vector<std::string>>& raw,
                           std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels) {
    if (raw.empty()) fail(errc::non_rectangular, "empty table");
    const std::size_t m = raw.front().size();
    if (m == 0) fail(errc::non_rectangular, "empty first row");
    std::vector<double> values;
    values.reserve(raw.size() * m);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != m)
            fail(errc::non_rectangular,
                 "row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                     " cells, expected " + std::to_string(m));
        for (std::size_t j = 0; j < m; ++j) {
            const std::string cell = strip(raw[i][j]);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v))
                fail(errc::non_numeric_cell,
                     "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is not a finite number: \"" + raw[i][j] + "\"");
            values.push_back(v);
        }
    }
    return DataMatrix(raw.size(), m, std::move(values),
                      std::move(row_labels), std::move(col_labels));
}

DataMatrix range_normalize(const DataMatrix& mat) {
    const std::size_t n = mat.rows(), m = mat.cols();
    std::vector<double> out(n * m);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = mat(0, j), hi = mat(0, j);
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, mat(i, j));
            hi = std::max(hi, mat(i, j));
        }
        if (hi == lo)
            fail(errc::zero_range_column,
                 "column \"" + mat.col_labels()[j] + "\" is constant; range is zero");
        const double range = hi - lo;
        for (std::size_t i = 0; i < n; ++i)
            out[i * m + j] = (mat(i, j) - lo) / range;
    }
    return DataMatrix(n, m, std::move(out), mat.row_labels(), mat.col_labels());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    for (auto& c : cells) c = strip(c);
    return cells;
}

} // namespace

DataMatrix read_csv(std::istream& in, const CsvOptions& opts) {
    std::vector<std::vector<std::string>> grid;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (strip(line).empty()) continue;
        grid.push_back(split_csv_line(line));
    }
    if (grid.empty()) fail(errc::non_rectangular, "empty CSV input");

    std::vector<std::string> col_labels;
    if (opts.header) {
        col_labels = grid.front();
        grid.erase(grid.begin());
        if (grid.empty()) fail(errc::non_rectangular, "CSV has a header but no data rows");
    }
    std::vector<std::string> row_labels;
    if (opts.row_labels) {
        for (auto& row : grid) {
            if (row.empty()) fail(errc::non_rectangular, "empty CSV row");
            row_labels.push_back(row.front());
            row.erase(row.begin());
        }
        if (opts.header && !col_labels.empty()) col_labels.erase(col_labels.begin());
    }
    if (opts.header && !grid.empty() && col_labels.size() != grid.front().size())
        fail(errc::non_rectangular, "CSV header width does not match data width");
    return validate_matrix(grid, std::move(row_labels), std::move(col_labels));
}

DataMatrix read_csv_file(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open file: " + path);
    return read_csv(in, opts);
}

std::string format_double(double value, int precision) {
    char buf[64];
    std::to_chars_result res;
    if (precision > 0)
        res = std::to_chars(buf, buf + sizeof(buf), value,
                            std::chars_format::general, precision);
    else
        res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_csv(const DataMatrix& mat, int precision) {
    std::ostringstream out;
    out << "label";
    for (const auto& c : mat.col_labels()) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        out << mat.row_labels()[i];
        for (std::size_t j = 0; j < mat.cols(); ++j)
            out << ',' << format_double(mat(i, j), precision);
        out << '\n';
    }
    return out.str();
}

} // namespace dendrowave
