#pragma once

#include <optional>
#include <vector>

#include "latcol/matrix.hpp"

namespace latcol {

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form: leftmost pivot column, first nonzero row in that
/// column, pivot normalized to 1, full back-substitution. Deterministic.
[[nodiscard]] RrefResult rref(Matrix m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of ker M as the columns of a cols(M) x (cols(M) - rank) matrix,
/// one column per free variable (free variable set to 1, others to 0).
[[nodiscard]] Matrix nullspace_basis(const Matrix& m);

struct AffineSolution {
    Vector particular;   // free variables set to zero
    Matrix homogeneous;  // basis of ker A as columns
};

/// Solves A x = b. Returns nullopt when the system is inconsistent.
[[nodiscard]] std::optional<AffineSolution> solve_linear(const Matrix& a, const Vector& b);

[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);
[[nodiscard]] bool is_invertible(const Matrix& m);

}  // namespace latcol
