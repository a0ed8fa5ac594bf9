#include "latcol/subspace.hpp"

#include <algorithm>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"

namespace latcol {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient() != b.ambient()) {
        throw InputError(std::string(op) + ": ambient dimensions differ (" + std::to_string(a.ambient()) +
                         " vs " + std::to_string(b.ambient()) + ")");
    }
}

void require_square_acting(const Matrix& a, const Subspace& s, const char* op) {
    if (!a.is_square() || a.cols() != s.ambient()) {
        throw InputError(std::string(op) + ": matrix must be square of size " + std::to_string(s.ambient()));
    }
}

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span_of(std::size_t ambient, std::span<const Vector> vectors) {
    Matrix rows(vectors.size(), ambient);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != ambient) {
            throw InputError("span_of: vector " + std::to_string(k) + " has length " +
                             std::to_string(vectors[k].size()) + ", expected " + std::to_string(ambient));
        }
        for (std::size_t c = 0; c < ambient; ++c) {
            rows(k, c) = vectors[k][c];
        }
    }
    RrefResult red = rref(std::move(rows));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ambient, red.rank);
    for (std::size_t j = 0; j < red.rank; ++j) {
        for (std::size_t c = 0; c < ambient; ++c) {
            s.basis_(c, j) = red.reduced(j, c);
        }
    }
    s.pivots_ = std::move(red.pivots);
    return s;
}

Subspace Subspace::column_space(const Matrix& m) {
    std::vector<Vector> cols = m.columns();
    return span_of(m.rows(), cols);
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        s.pivots_[k] = k;
    }
    return s;
}

Vector Subspace::residual(const Vector& v) const {
    if (v.size() != ambient_) {
        throw InputError("residual: vector length does not match ambient dimension");
    }
    Vector r = v;
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
        const Scalar& coef = v[pivots_[j]];
        if (coef.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < ambient_; ++c) {
            const Scalar& b = basis_(c, j);
            if (!b.is_zero()) {
                r[c] -= coef * b;
            }
        }
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return latcol::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "contains");
    for (std::size_t j = 0; j < other.dim(); ++j) {
        if (!contains(other.basis_.column(j))) {
            return false;
        }
    }
    return true;
}

Matrix Subspace::complement_projector() const {
    Matrix p = Matrix::identity(ambient_);
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
        for (std::size_t c = 0; c < ambient_; ++c) {
            p(c, pivots_[j]) -= basis_(c, j);
        }
    }
    return p;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) {
        throw InputError("coordinates: vector is not in the subspace");
    }
    Vector coords(pivots_.size());
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
        coords[j] = v[pivots_[j]];
    }
    return coords;
}

std::string Subspace::to_string() const {
    std::string out = "span{";
    for (std::size_t j = 0; j < dim(); ++j) {
        if (j > 0) {
            out += ", ";
        }
        out += latcol::to_string(basis_.column(j));
    }
    return out + "} in C^" + std::to_string(ambient_);
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) {
        return a.ambient_ < b.ambient_;
    }
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    return a.basis_ < b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    if (a.contains(b)) {
        return a;
    }
    if (b.contains(a)) {
        return b;
    }
    std::vector<Vector> vecs = a.basis().columns();
    for (auto& v : b.basis().columns()) {
        vecs.push_back(std::move(v));
    }
    return Subspace::span_of(a.ambient(), vecs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) {
        return Subspace(a.ambient());
    }
    // (u, w) in ker [A | -B]  <=>  A u = B w, a common vector.
    Matrix joint = a.basis().hconcat(Scalar(-1) * b.basis());
    Matrix ker = nullspace_basis(joint);
    Matrix coeffs = ker.block(0, 0, a.dim(), ker.cols());
    return Subspace::column_space(a.basis() * coeffs);
}

Order compare(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "compare");
    const bool a_in_b = b.contains(a);
    const bool b_in_a = a.contains(b);
    if (a_in_b && b_in_a) {
        return Order::Equal;
    }
    if (a_in_b) {
        return Order::Less;
    }
    if (b_in_a) {
        return Order::Greater;
    }
    return Order::Incomparable;
}

Subspace nullspace(const Matrix& m) { return Subspace::column_space(nullspace_basis(m)); }

Subspace range(const Matrix& m) { return Subspace::column_space(m); }

Subspace image(const Matrix& a, const Subspace& s) {
    if (a.cols() != s.ambient()) {
        throw InputError("image: matrix column count does not match ambient dimension");
    }
    return Subspace::column_space(a * s.basis());
}

Subspace preimage(const Matrix& a, const Subspace& s) {
    require_square_acting(a, s, "preimage");
    return nullspace(s.complement_projector() * a);
}

bool is_invariant(const Matrix& a, const Subspace& s) {
    require_square_acting(a, s, "is_invariant");
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (!s.contains(a.apply(s.basis().column(j)))) {
            return false;
        }
    }
    return true;
}

}  // namespace latcol
