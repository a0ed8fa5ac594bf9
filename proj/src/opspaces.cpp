#include "latcol/opspaces.hpp"

#include <set>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"

namespace latcol {

OperatorSpace::OperatorSpace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), basis_(0, rows * cols) {}

OperatorSpace OperatorSpace::from_vectorized(std::size_t rows, std::size_t cols, Matrix vectorized) {
    if (vectorized.cols() != rows * cols) {
        throw InputError("operator space: vectorized length does not match shape");
    }
    RrefResult red = rref(std::move(vectorized));
    OperatorSpace s(rows, cols);
    s.basis_ = red.reduced.block(0, 0, red.rank, rows * cols);
    s.pivots_ = std::move(red.pivots);
    return s;
}

OperatorSpace OperatorSpace::span_of(std::size_t rows, std::size_t cols, std::span<const Matrix> spanning) {
    Matrix v(spanning.size(), rows * cols);
    for (std::size_t k = 0; k < spanning.size(); ++k) {
        if (spanning[k].rows() != rows || spanning[k].cols() != cols) {
            throw InputError("operator space: matrix " + std::to_string(k) + " has the wrong shape");
        }
        auto e = spanning[k].entries();
        for (std::size_t c = 0; c < e.size(); ++c) {
            v(k, c) = e[c];
        }
    }
    return from_vectorized(rows, cols, std::move(v));
}

OperatorSpace OperatorSpace::full(std::size_t rows, std::size_t cols) {
    return from_vectorized(rows, cols, Matrix::identity(rows * cols));
}

Matrix OperatorSpace::basis_element(std::size_t k) const { return Matrix::unvectorize(rows_, cols_, basis_.row(k)); }

std::vector<Matrix> OperatorSpace::basis() const {
    std::vector<Matrix> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        out.push_back(basis_element(k));
    }
    return out;
}

bool OperatorSpace::contains(const Matrix& t) const {
    if (t.rows() != rows_ || t.cols() != cols_) {
        return false;
    }
    Vector r = t.vectorize();
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar coef = r[pivots_[k]];
        if (coef.is_zero()) {
            continue;
        }
        auto row = basis_.row(k);
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (!row[c].is_zero()) {
                r[c] -= coef * row[c];
            }
        }
    }
    return is_zero(r);
}

Vector OperatorSpace::coordinates(const Matrix& t) const {
    if (!contains(t)) {
        throw InputError("coordinates: matrix is not in the operator space");
    }
    auto e = t.entries();
    Vector out(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        out[k] = e[pivots_[k]];
    }
    return out;
}

Matrix OperatorSpace::combine(std::span<const Scalar> coefficients) const {
    if (coefficients.size() != dim()) {
        throw InputError("combine: expected " + std::to_string(dim()) + " coefficients");
    }
    Vector v(rows_ * cols_);
    for (std::size_t k = 0; k < dim(); ++k) {
        if (coefficients[k].is_zero()) {
            continue;
        }
        auto row = basis_.row(k);
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (!row[c].is_zero()) {
                v[c] += coefficients[k] * row[c];
            }
        }
    }
    return Matrix::unvectorize(rows_, cols_, v);
}

std::string OperatorSpace::to_string() const {
    std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + " dim " + std::to_string(dim()) + " {";
    for (std::size_t k = 0; k < dim(); ++k) {
        out += (k > 0 ? ", " : "") + basis_element(k).to_string();
    }
    return out + "}";
}

OperatorSpace direct_sum(std::span<const OperatorSpace> spaces) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& s : spaces) {
        rows += s.rows();
        cols += s.cols();
    }
    std::vector<Matrix> spanning;
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& s : spaces) {
        for (const auto& b : s.basis()) {
            Matrix big(rows, cols);
            big.set_block(r0, c0, b);
            spanning.push_back(std::move(big));
        }
        r0 += s.rows();
        c0 += s.cols();
    }
    return OperatorSpace::span_of(rows, cols, spanning);
}

namespace {

// Solution space of a homogeneous linear system in the entries of an m x n
// matrix, one constraint per row of `system`.
OperatorSpace solve_space(std::size_t m, std::size_t n, const std::vector<Vector>& constraints) {
    const std::size_t unknowns = m * n;
    if (constraints.empty()) {
        return OperatorSpace::full(m, n);
    }
    Matrix system(constraints.size(), unknowns);
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) {
            system(r, c) = constraints[r][c];
        }
    }
    return OperatorSpace::from_vectorized(m, n, nullspace_basis(system).transpose());
}

// Linear constraints on T (d x d) expressing T S subset S.
void append_invariance_constraints(const Subspace& s, std::vector<Vector>& out) {
    const std::size_t d = s.ambient();
    if (s.is_zero() || s.is_whole()) {
        return;
    }
    const Matrix p = s.complement_projector();
    const Matrix& b = s.basis();
    std::vector<bool> is_pivot(d, false);
    for (auto p_row : s.pivots()) {
        is_pivot[p_row] = true;
    }
    // (P T B)_{r,c} = sum_{a,b} P_{r,a} T_{a,b} B_{b,c}; pivot rows of P vanish.
    for (std::size_t r = 0; r < d; ++r) {
        if (is_pivot[r]) {
            continue;
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Vector row(d * d);
            for (std::size_t a = 0; a < d; ++a) {
                if (p(r, a).is_zero()) {
                    continue;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    if (!b(k, c).is_zero()) {
                        row[a * d + k] = p(r, a) * b(k, c);
                    }
                }
            }
            out.push_back(std::move(row));
        }
    }
}

OperatorSpace algebra_of(std::size_t d, const std::vector<Subspace>& family) {
    std::vector<Vector> constraints;
    for (const auto& s : family) {
        append_invariance_constraints(s, constraints);
    }
    return solve_space(d, d, constraints);
}

void push_unique(std::vector<Subspace>& list, Subspace s) {
    for (const auto& e : list) {
        if (e == s) {
            return;
        }
    }
    list.push_back(std::move(s));
}

std::vector<Subspace> kernel_range_generators(const Matrix& n) {
    const std::size_t index = nil_index(n);
    const std::size_t d = n.rows();
    std::vector<Subspace> gens;
    Matrix p = Matrix::identity(d);
    for (std::size_t j = 0; j <= index; ++j) {
        push_unique(gens, nullspace(p));
        push_unique(gens, range(p));
        p = p * n;
    }
    return gens;
}

}  // namespace

OperatorSpace intertwiners(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square()) {
        throw InputError("intertwiners: both matrices must be square");
    }
    const std::size_t m = a.rows();
    const std::size_t n = b.rows();
    std::vector<Vector> constraints;
    constraints.reserve(m * n);
    // (A T - T B)_{i,j} = sum_k A_{i,k} T_{k,j} - sum_k T_{i,k} B_{k,j}
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector row(m * n);
            for (std::size_t k = 0; k < m; ++k) {
                if (!a(i, k).is_zero()) {
                    row[k * n + j] += a(i, k);
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (!b(k, j).is_zero()) {
                    row[i * n + k] -= b(k, j);
                }
            }
            constraints.push_back(std::move(row));
        }
    }
    return solve_space(m, n, constraints);
}

OperatorSpace commutant(const Matrix& a) { return intertwiners(a, a); }

OperatorSpace jordan_intertwiner_closed_form(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw InputError("jordan_intertwiner_closed_form: block sizes must be positive");
    }
    const std::size_t k = std::min(m, n);
    const Matrix j = Matrix::jordan_block(k);
    std::vector<Matrix> spanning;
    Matrix power = Matrix::identity(k);
    for (std::size_t e = 0; e < k; ++e) {
        Matrix t(m, n);
        if (m <= n) {
            t.set_block(0, n - m, power);
        } else {
            t.set_block(0, 0, power);
        }
        spanning.push_back(std::move(t));
        power = power * j;
    }
    return OperatorSpace::span_of(m, n, spanning);
}

OperatorSpace jordan_refl_closed_form(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw InputError("jordan_refl_closed_form: block sizes must be positive");
    }
    const std::size_t k = std::min(m, n);
    const std::size_t shift = m <= n ? n - m : 0;
    std::vector<Matrix> spanning;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            spanning.push_back(Matrix::unit(m, n, i, shift + j));
        }
    }
    return OperatorSpace::span_of(m, n, spanning);
}

OperatorSpace alg_lat_commutant(const Matrix& n) {
    return algebra_of(n.rows(), kernel_range_generators(n));
}

OperatorSpace alg_lat_primary(const Matrix& a, const std::vector<Scalar>& spectrum) {
    PrimaryDecomposition pd = primary_decompose(a, spectrum);
    const std::size_t d = a.rows();
    std::vector<Matrix> shifted;
    for (const auto& c : pd.components) {
        shifted.push_back(a - c.eigenvalue * Matrix::identity(d));
    }
    std::vector<Subspace> family;
    std::vector<std::size_t> e(pd.components.size(), 0);
    while (true) {
        Matrix p = Matrix::identity(d);
        for (std::size_t j = 0; j < e.size(); ++j) {
            p = p * shifted[j].pow(e[j]);
        }
        push_unique(family, nullspace(p));
        push_unique(family, range(p));
        std::size_t pos = 0;
        while (pos < e.size() && ++e[pos] > pd.components[pos].exponent) {
            e[pos] = 0;
            ++pos;
        }
        if (pos == e.size()) {
            break;
        }
    }
    return algebra_of(d, family);
}

OperatorSpace refl_blockwise(const JordanType& type) {
    const std::size_t d = type.dimension();
    std::vector<Matrix> spanning;
    std::size_t r0 = 0;
    for (auto ni : type.blocks) {
        std::size_t c0 = 0;
        for (auto nj : type.blocks) {
            for (const auto& b : jordan_refl_closed_form(ni, nj).basis()) {
                Matrix big(d, d);
                big.set_block(r0, c0, b);
                spanning.push_back(std::move(big));
            }
            c0 += nj;
        }
        r0 += ni;
    }
    return OperatorSpace::span_of(d, d, spanning);
}

OperatorSpace refl_sampled_superset(const OperatorSpace& s, const VectorSample& sample) {
    const std::size_t m = s.rows();
    const std::size_t n = s.cols();
    VectorSample smp = sample;
    smp.ambient = n;
    const std::vector<Matrix> generators = s.basis();
    std::vector<Matrix> current = OperatorSpace::full(m, n).basis();
    for (const auto& x : smp.vectors()) {
        if (current.empty()) {
            break;
        }
        std::vector<Vector> images;
        images.reserve(generators.size());
        for (const auto& g : generators) {
            images.push_back(g.apply(x));
        }
        const Subspace sx = Subspace::span_of(m, images);
        std::vector<Vector> residuals;
        bool all_zero = true;
        for (const auto& c : current) {
            residuals.push_back(sx.residual(c.apply(x)));
            all_zero = all_zero && is_zero(residuals.back());
        }
        if (all_zero) {
            continue;
        }
        const Matrix coeffs = nullspace_basis(Matrix::from_columns(m, residuals));
        std::vector<Matrix> next;
        for (std::size_t col = 0; col < coeffs.cols(); ++col) {
            Matrix t(m, n);
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (!coeffs(i, col).is_zero()) {
                    t = t + coeffs(i, col) * current[i];
                }
            }
            next.push_back(std::move(t));
        }
        current = std::move(next);
    }
    return OperatorSpace::span_of(m, n, current);
}

Matrix hankel_witness(std::size_t m, std::size_t n, const Matrix& t, const Vector& x) {
    if (t.rows() != m || t.cols() != n || x.size() != n) {
        throw InputError("hankel_witness: shape mismatch");
    }
    const std::size_t k = std::min(m, n);
    const std::size_t shift = m <= n ? n - m : 0;
    // Membership in the closed form, read off the support pattern directly.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            const bool allowed = i < k && c >= shift + i && c < shift + k;
            if (!allowed && !t(i, c).is_zero()) {
                throw InputError("hankel_witness: T is outside the closed-form reflexive space");
            }
        }
    }
    // Both T x and S x live in the first k rows and only see x[shift..shift+k).
    Vector y(x.begin() + static_cast<std::ptrdiff_t>(shift), x.begin() + static_cast<std::ptrdiff_t>(shift + k));
    Vector r = t.apply(x);
    std::size_t last = k;
    for (std::size_t i = k; i-- > 0;) {
        if (!y[i].is_zero()) {
            last = i;
            break;
        }
    }
    Vector s(k);
    if (last < k) {
        // Row i of p(J_k) y = r reads sum_l s_l y_{i+l} = r_i; rows i = last,
        // last-1, ..., 0 each introduce one new coefficient s_{last-i}.
        const Scalar lead_inv = y[last].inverse();
        for (std::size_t i = last + 1; i-- > 0;) {
            const std::size_t l_new = last - i;
            Scalar acc = r[i];
            for (std::size_t l = 0; l < l_new; ++l) {
                acc -= s[l] * y[i + l];
            }
            s[l_new] = acc * lead_inv;
        }
    }
    const Matrix j = Matrix::jordan_block(k);
    Matrix poly(k, k);
    Matrix power = Matrix::identity(k);
    for (std::size_t l = 0; l < k; ++l) {
        if (!s[l].is_zero()) {
            poly = poly + s[l] * power;
        }
        power = power * j;
    }
    Matrix out(m, n);
    out.set_block(0, shift, poly);
    return out;
}

HyperinvariantGenerators hyperinvariant_generators(const Matrix& n) {
    HyperinvariantGenerators h;
    h.generators = kernel_range_generators(n);
    std::set<Subspace> closure(h.generators.begin(), h.generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subspace> members(closure.begin(), closure.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                grew |= closure.insert(sum(members[i], members[j])).second;
                grew |= closure.insert(intersect(members[i], members[j])).second;
            }
        }
    }
    h.closure.assign(closure.begin(), closure.end());
    return h;
}

bool is_hyperinvariant(const Matrix& n, const Subspace& m) {
    for (const auto& b : commutant(n).basis()) {
        if (!is_invariant(b, m)) {
            return false;
        }
    }
    return true;
}

}  // namespace latcol
