#pragma once

#include <span>
#include <string>
#include <vector>

#include "latcol/matrix.hpp"
#include "latcol/sample.hpp"
#include "latcol/structure.hpp"
#include "latcol/subspace.hpp"

namespace latcol {

// A linear space of m x n matrices.
//
// Stored as the RREF of the row-major vectorized spanning matrices, so two
// spaces are equal iff their stored bases are equal.
class OperatorSpace {
public:
    OperatorSpace() = default;
    /// The zero space of m x n matrices.
    OperatorSpace(std::size_t rows, std::size_t cols);

    static OperatorSpace span_of(std::size_t rows, std::size_t cols, std::span<const Matrix> spanning);
    /// Span of the given length-(rows*cols) vectors, one per row of `vectorized`.
    static OperatorSpace from_vectorized(std::size_t rows, std::size_t cols, Matrix vectorized);
    static OperatorSpace full(std::size_t rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    /// Canonical basis, one vectorized matrix per row.
    [[nodiscard]] const Matrix& vectorized_basis() const { return basis_; }
    [[nodiscard]] std::vector<Matrix> basis() const;
    [[nodiscard]] Matrix basis_element(std::size_t k) const;

    [[nodiscard]] bool contains(const Matrix& t) const;
    /// Coordinates of a member in the canonical basis (entries at pivot positions).
    [[nodiscard]] Vector coordinates(const Matrix& t) const;
    /// Sum of coefficients[k] * basis_element(k).
    [[nodiscard]] Matrix combine(std::span<const Scalar> coefficients) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.basis_ == b.basis_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Block-diagonal space: the k-th diagonal block ranges over spaces[k], every
/// off-diagonal block is zero.
[[nodiscard]] OperatorSpace direct_sum(std::span<const OperatorSpace> spaces);

/// {T : A T = T A}.
[[nodiscard]] OperatorSpace commutant(const Matrix& a);
/// {T : A T = T B} for A m x m and B n x n; T is m x n.
[[nodiscard]] OperatorSpace intertwiners(const Matrix& a, const Matrix& b);

/// Intertwiners of J_m and J_n written out: [0 | p(J_m)] when m <= n,
/// [p(J_n); 0] when m > n, p ranging over polynomials.
[[nodiscard]] OperatorSpace jordan_intertwiner_closed_form(std::size_t m, std::size_t n);
/// [0 | V] (m <= n) or [U; 0] (m > n) with V, U upper triangular of size min(m, n).
[[nodiscard]] OperatorSpace jordan_refl_closed_form(std::size_t m, std::size_t n);

/// Matrices leaving every ker N^j and every ran N^j invariant.
[[nodiscard]] OperatorSpace alg_lat_commutant(const Matrix& n);
/// Matrices leaving invariant the kernel and range of every product
/// prod_j (A - lambda_j)^{e_j}, 0 <= e_j <= n_j. For nilpotent A and
/// spectrum {0} this is alg_lat_commutant(A).
[[nodiscard]] OperatorSpace alg_lat_primary(const Matrix& a, const std::vector<Scalar>& spectrum);
/// Block matrix space whose (i, j) block is jordan_refl_closed_form(n_i, n_j).
[[nodiscard]] OperatorSpace refl_blockwise(const JordanType& type);

/// Intersection over the sample of {T : T x in S x}. Always contains the
/// reflexive cover of S; it can only be larger.
[[nodiscard]] OperatorSpace refl_sampled_superset(const OperatorSpace& s, const VectorSample& sample);

/// For T in jordan_refl_closed_form(m, n) and x in C^n, the intertwiner
/// S in jordan_intertwiner_closed_form(m, n) with S x = T x, found by
/// back-substitution in the anti-triangular Hankel system. S = 0 when the
/// relevant coordinates of x vanish. Throws InputError when T is outside
/// the closed form.
[[nodiscard]] Matrix hankel_witness(std::size_t m, std::size_t n, const Matrix& t, const Vector& x);

struct HyperinvariantGenerators {
    std::vector<Subspace> generators;  // distinct ker N^j and ran N^j
    std::vector<Subspace> closure;     // closed under sum and intersection, sorted
};
[[nodiscard]] HyperinvariantGenerators hyperinvariant_generators(const Matrix& n);
/// Invariance under every basis element of the commutant of N.
[[nodiscard]] bool is_hyperinvariant(const Matrix& n, const Subspace& m);

}  // namespace latcol
