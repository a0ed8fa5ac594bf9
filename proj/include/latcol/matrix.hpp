#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "latcol/gaussian.hpp"

namespace latcol {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Nilpotent Jordan block: ones on the superdiagonal, so J e_1 = 0 and J e_k = e_{k-1}.
    static Matrix jordan_block(std::size_t m);
    /// Standard unit matrix with a single 1 at (k, l), zero-based.
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t k, std::size_t l);
    static Matrix diagonal(std::span<const Scalar> diag);
    static Matrix block_diagonal(std::span<const Matrix> blocks);
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix column_vector(const Vector& v);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Scalar> entries() const { return data_; }
    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
        return std::span<const Scalar>(data_).subspan(r * cols_, cols_);
    }
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] std::vector<Vector> columns() const;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    [[nodiscard]] Matrix hconcat(const Matrix& rhs) const;
    [[nodiscard]] Matrix vconcat(const Matrix& rhs) const;
    [[nodiscard]] Matrix select_rows(std::span<const std::size_t> rows) const;
    [[nodiscard]] Matrix select_columns(std::span<const std::size_t> cols) const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_diagonal() const;
    [[nodiscard]] Matrix pow(std::size_t k) const;
    [[nodiscard]] Vector apply(const Vector& x) const;

    /// Row-major flattening, the vectorization order used for operator spaces.
    [[nodiscard]] Vector vectorize() const { return data_; }
    static Matrix unvectorize(std::size_t rows, std::size_t cols, std::span<const Scalar> v);

    [[nodiscard]] std::string to_string() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;
    friend bool operator<(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

[[nodiscard]] bool is_zero(const Vector& v);
[[nodiscard]] Vector operator+(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator-(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator*(const Scalar& s, const Vector& v);
[[nodiscard]] Vector unit_vector(std::size_t n, std::size_t k);
[[nodiscard]] std::string to_string(const Vector& v);

}  // namespace latcol
