#include "latcol/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcol {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("matrix entry count does not match its shape");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::jordan_block(std::size_t m) {
    Matrix j(m, m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        j(k, k + 1) = 1;
    }
    return j;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t k, std::size_t l) {
    Matrix e(rows, cols);
    e(k, l) = 1;
    return e;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
        m(k, k) = diag[k];
    }
    return m;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("column length does not match row count");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

Matrix Matrix::column_vector(const Vector& v) { return {v.size(), 1, v}; }

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out.push_back(column(c));
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) {
        throw std::out_of_range("block exceeds matrix bounds");
    }
    Matrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            b(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
        throw std::out_of_range("block exceeds matrix bounds");
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            (*this)(r0 + r, c0 + c) = b(r, c);
        }
    }
}

Matrix Matrix::hconcat(const Matrix& rhs) const {
    if (rows_ != rhs.rows_) {
        throw std::invalid_argument("hconcat: row counts differ");
    }
    Matrix m(rows_, cols_ + rhs.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, rhs);
    return m;
}

Matrix Matrix::vconcat(const Matrix& rhs) const {
    if (cols_ != rhs.cols_) {
        throw std::invalid_argument("vconcat: column counts differ");
    }
    Matrix m(rows_ + rhs.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, rhs);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix m(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(k, c) = (*this)(rows[k], c);
        }
    }
    return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols.size(); ++k) {
            m(r, k) = (*this)(r, cols[k]);
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_diagonal() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Matrix Matrix::pow(std::size_t k) const {
    if (!is_square()) {
        throw std::invalid_argument("pow of non-square matrix");
    }
    Matrix result = identity(rows_);
    for (std::size_t i = 0; i < k; ++i) {
        result = result * *this;
    }
    return result;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("apply: vector length does not match column count");
    }
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !x[c].is_zero()) {
                acc += a * x[c];
            }
        }
        y[r] = std::move(acc);
    }
    return y;
}

Matrix Matrix::unvectorize(std::size_t rows, std::size_t cols, std::span<const Scalar> v) {
    return {rows, cols, std::vector<Scalar>(v.begin(), v.end())};
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r > 0) {
            out += "; ";
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += (*this)(r, c).to_string();
        }
    }
    out += "]";
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix sum: shape mismatch");
    }
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
        m.data_[k] = a.data_[k] + b.data_[k];
    }
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix difference: shape mismatch");
    }
    Matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
        m.data_[k] = a.data_[k] - b.data_[k];
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero()) {
                    m(r, c) += x * y;
                }
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    if (s.is_zero()) {
        return m;
    }
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
        m.data_[k] = s * a.data_[k];
    }
    return m;
}

bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) {
        return a.rows_ < b.rows_;
    }
    if (a.cols_ != b.cols_) {
        return a.cols_ < b.cols_;
    }
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector sum: length mismatch");
    }
    Vector v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        v[k] = a[k] + b[k];
    }
    return v;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector difference: length mismatch");
    }
    Vector v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        v[k] = a[k] - b[k];
    }
    return v;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = s * v[k];
    }
    return out;
}

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v.at(k) = 1;
    return v;
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += v[k].to_string();
    }
    return out + ")";
}

}  // namespace latcol
