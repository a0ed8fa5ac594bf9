#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcol/matrix.hpp"
#include "latcol/sample.hpp"
#include "latcol/subspace.hpp"

namespace latcol {

// Jordan block sizes of a nilpotent matrix, in descending order.
struct JordanType {
    std::vector<std::size_t> blocks;

    [[nodiscard]] std::size_t dimension() const;
    /// Number of blocks of size >= 2.
    [[nodiscard]] std::size_t nontrivial_blocks() const;
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const JordanType&, const JordanType&) = default;
    friend auto operator<=>(const JordanType&, const JordanType&) = default;
};

/// All Jordan types (partitions) of total dimension n, largest blocks first.
[[nodiscard]] std::vector<JordanType> jordan_types_of_dimension(std::size_t n);
/// J_{n1} (+) ... (+) J_{nk} for the given type.
[[nodiscard]] Matrix jordan_matrix(const JordanType& type);

/// Smallest n >= 1 with N^n = 0. Throws PreconditionError if N is not nilpotent.
[[nodiscard]] std::size_t nil_index(const Matrix& n);
[[nodiscard]] bool is_nilpotent(const Matrix& n);
/// Blocks of size >= k number rank(N^{k-1}) - rank(N^k).
[[nodiscard]] JordanType jordan_type(const Matrix& n);

// Change of basis to Jordan form: basis^{-1} N basis = jordan_matrix(type).
// Columns are grouped by block, each block ordered N^{s-1}x, ..., Nx, x.
struct JordanBasis {
    JordanType type;
    Matrix basis;
    Matrix basis_inverse;
};
[[nodiscard]] JordanBasis jordan_basis(const Matrix& n);

/// Krylov span {x, Ax, A^2 x, ...}.
[[nodiscard]] Subspace cyclic_subspace(const Matrix& a, const Vector& x);

// Chain {0} < (N)_{N^k x} < ... < (N)_{Nx} < (N)_x of a nilpotent N.
struct CyclicChain {
    Vector generator;
    std::size_t height = 0;       // largest k with N^k x != 0; 0 for x = 0
    std::vector<Vector> krylov;   // x, Nx, ..., N^height x (empty for x = 0)
    std::vector<Subspace> chain;  // chain[j] = span{N^h x, ..., N^{h-j} x}

    [[nodiscard]] const Subspace& top() const { return chain.back(); }
};
[[nodiscard]] CyclicChain cyclic_chain(const Matrix& n, const Vector& x);

struct CycleReport {
    std::size_t checked = 0;
    std::vector<Vector> violations;  // sampled y in (N)_x whose cyclic subspace is off the chain
    [[nodiscard]] bool passed() const { return violations.empty(); }
};
/// Samples y in (N)_x (coefficients from a VectorSample of dimension k_x + 1)
/// and checks that (N)_y is a member of the chain of (N)_x.
[[nodiscard]] CycleReport cycle_check(const Matrix& n, const Vector& x, const VectorSample& coefficients);

struct PrimaryComponent {
    Scalar eigenvalue;
    std::size_t exponent = 0;  // n_j: ker (A - lambda)^{n_j} stagnates
    Subspace space;            // V_j
    Matrix basis;              // d x dim V_j, a Jordan basis of N_j
    Matrix nilpotent;          // N_j in that basis (Jordan form)
    JordanType type;
};

// A = (+)_j (lambda_j I + N_j) in the coordinates of change_of_basis.
struct PrimaryDecomposition {
    std::vector<PrimaryComponent> components;
    Matrix change_of_basis;  // [basis_1 | ... | basis_s]
    Matrix change_of_basis_inverse;

    [[nodiscard]] std::size_t dimension() const { return change_of_basis.rows(); }
    /// First coordinate of component j in the change-of-basis ordering.
    [[nodiscard]] std::size_t offset(std::size_t j) const;
};

/// Primary decomposition for a caller-supplied spectrum, which must be the
/// exact set of distinct eigenvalues. Throws InputError on duplicates or when
/// the product of (A - lambda_j)^{n_j} is not zero.
[[nodiscard]] PrimaryDecomposition primary_decompose(const Matrix& a, const std::vector<Scalar>& spectrum);

/// S invertible with S N1 = N2 S, or nullopt when the Jordan types differ.
[[nodiscard]] std::optional<Matrix> nilpotent_similarity(const Matrix& n1, const Matrix& n2);

/// Partition of component indices into classes of similar nilpotent parts,
/// classes ordered by smallest member.
[[nodiscard]] std::vector<std::vector<std::size_t>> group_by_similarity(const PrimaryDecomposition& pd);

}  // namespace latcol
