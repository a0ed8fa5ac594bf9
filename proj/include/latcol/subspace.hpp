#pragma once

#include <span>
#include <string>
#include <vector>

#include "latcol/matrix.hpp"

namespace latcol {

enum class Order { Equal, Less, Greater, Incomparable };

// Subspace of C^n stored by its reduced column echelon basis.
//
// The basis is the transpose of the RREF of the spanning vectors written as
// rows, so it is unique per subspace: equality of subspaces is equality of
// basis matrices. `pivots()[j]` is the coordinate where basis column j has
// its leading 1; every other basis column is zero at that coordinate.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of C^ambient (0-column basis).
    explicit Subspace(std::size_t ambient);

    static Subspace span_of(std::size_t ambient, std::span<const Vector> vectors);
    static Subspace column_space(const Matrix& m);
    static Subspace whole(std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.cols(); }
    [[nodiscard]] bool is_zero() const { return dim() == 0; }
    [[nodiscard]] bool is_whole() const { return dim() == ambient_; }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its component along the subspace, taken against the pivot
    /// coordinates; zero iff v lies in the subspace. The map is a projection
    /// onto the span of the non-pivot coordinates with kernel equal to this subspace.
    [[nodiscard]] Vector residual(const Vector& v) const;
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Matrix of `residual` (I - B E where E picks the pivot rows).
    [[nodiscard]] Matrix complement_projector() const;
    /// Coordinates of a member vector in the canonical basis.
    [[nodiscard]] Vector coordinates(const Vector& v) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace sum(const Subspace& a, const Subspace& b);
[[nodiscard]] Subspace intersect(const Subspace& a, const Subspace& b);
[[nodiscard]] Order compare(const Subspace& a, const Subspace& b);

/// Kernel of M as a subspace of C^cols(M).
[[nodiscard]] Subspace nullspace(const Matrix& m);
/// Column space of M.
[[nodiscard]] Subspace range(const Matrix& m);
/// A S, the image of the subspace under A.
[[nodiscard]] Subspace image(const Matrix& a, const Subspace& s);
/// {x : A x in S}.
[[nodiscard]] Subspace preimage(const Matrix& a, const Subspace& s);
/// True iff A S is contained in S.
[[nodiscard]] bool is_invariant(const Matrix& a, const Subspace& s);

}  // namespace latcol
