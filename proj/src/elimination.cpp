#include "latcol/elimination.hpp"

#include <stdexcept>
#include <utility>

namespace latcol {

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            for (std::size_t k = c; k < cols; ++k) {
                std::swap(m(p, k), m(r, k));
            }
        }
        if (!m(r, c).is_one()) {
            Scalar inv = m(r, c).inverse();
            m(r, c) = 1;
            for (std::size_t k = c + 1; k < cols; ++k) {
                if (!m(r, k).is_zero()) {
                    m(r, k) *= inv;
                }
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) {
                continue;
            }
            Scalar factor = m(i, c);
            m(i, c) = Scalar();
            for (std::size_t k = c + 1; k < cols; ++k) {
                if (!m(r, k).is_zero()) {
                    m(i, k) -= factor * m(r, k);
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

namespace {

Matrix kernel_from_rref(const RrefResult& red, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    Matrix basis(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            const Scalar& v = red.reduced(i, f);
            if (!v.is_zero()) {
                basis(red.pivots[i], k) = -v;
            }
        }
    }
    return basis;
}

}  // namespace

Matrix nullspace_basis(const Matrix& m) { return kernel_from_rref(rref(m), m.cols()); }

std::optional<AffineSolution> solve_linear(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve_linear: right-hand side length mismatch");
    }
    Matrix aug = a.hconcat(Matrix::column_vector(b));
    RrefResult red = rref(std::move(aug));
    const std::size_t n = a.cols();
    if (!red.pivots.empty() && red.pivots.back() == n) {
        return std::nullopt;
    }
    Vector x(n);
    for (std::size_t i = 0; i < red.rank; ++i) {
        x[red.pivots[i]] = red.reduced(i, n);
    }
    // The augmented column is never a pivot here, so the kernel of the
    // coefficient part is read off the same reduced form.
    RrefResult coeff{red.reduced.block(0, 0, red.reduced.rows(), n), red.rank, red.pivots};
    return AffineSolution{std::move(x), kernel_from_rref(coeff, n)};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Matrix();
    }
    RrefResult red = rref(m.hconcat(Matrix::identity(n)));
    if (red.rank < n || red.pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    return red.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace latcol
