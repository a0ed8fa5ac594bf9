#include "latcol/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"

namespace latcol {

std::size_t JordanType::dimension() const {
    std::size_t d = 0;
    for (auto b : blocks) {
        d += b;
    }
    return d;
}

std::size_t JordanType::nontrivial_blocks() const {
    return static_cast<std::size_t>(std::count_if(blocks.begin(), blocks.end(), [](auto b) { return b >= 2; }));
}

std::string JordanType::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += std::to_string(blocks[k]);
    }
    return out + "}";
}

std::vector<JordanType> jordan_types_of_dimension(std::size_t n) {
    std::vector<JordanType> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
        if (remaining == 0) {
            out.push_back({current});
            return;
        }
        for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (n > 0) {
        rec(n, n);
    }
    return out;
}

Matrix jordan_matrix(const JordanType& type) {
    std::vector<Matrix> blocks;
    blocks.reserve(type.blocks.size());
    for (auto b : type.blocks) {
        blocks.push_back(Matrix::jordan_block(b));
    }
    return Matrix::block_diagonal(blocks);
}

namespace {

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square()) {
        throw InputError(std::string(op) + ": matrix must be square");
    }
}

}  // namespace

bool is_nilpotent(const Matrix& n) {
    require_square(n, "is_nilpotent");
    return n.pow(n.rows()).is_zero();
}

std::size_t nil_index(const Matrix& n) {
    require_square(n, "nil_index");
    Matrix p = n;
    for (std::size_t k = 1; k <= std::max<std::size_t>(n.rows(), 1); ++k) {
        if (p.is_zero()) {
            return k;
        }
        p = p * n;
    }
    throw PreconditionError("not nilpotent");
}

JordanType jordan_type(const Matrix& n) {
    const std::size_t index = nil_index(n);
    const std::size_t d = n.rows();
    std::vector<std::size_t> ranks{d};
    Matrix p = Matrix::identity(d);
    for (std::size_t k = 1; k <= index; ++k) {
        p = p * n;
        ranks.push_back(rank(p));
    }
    ranks.push_back(0);
    JordanType type;
    for (std::size_t size = index; size >= 1; --size) {
        // blocks of size >= s minus blocks of size >= s+1
        std::size_t at_least = ranks[size - 1] - ranks[size];
        std::size_t at_least_next = ranks[size] - ranks[size + 1];
        for (std::size_t c = 0; c < at_least - at_least_next; ++c) {
            type.blocks.push_back(size);
        }
    }
    return type;
}

JordanBasis jordan_basis(const Matrix& n) {
    const std::size_t index = nil_index(n);
    const std::size_t d = n.rows();
    std::vector<Subspace> kernels{Subspace(d)};
    Matrix p = Matrix::identity(d);
    for (std::size_t k = 1; k <= index; ++k) {
        p = p * n;
        kernels.push_back(nullspace(p));
    }

    struct Chain {
        std::size_t size;
        Vector top;
    };
    std::vector<Chain> chains;
    for (std::size_t s = index; s >= 1; --s) {
        Subspace covered = kernels[s - 1];
        std::vector<Vector> level;
        for (const auto& c : chains) {
            Vector v = c.top;
            for (std::size_t k = s; k < c.size; ++k) {
                v = n.apply(v);
            }
            level.push_back(std::move(v));
        }
        if (!level.empty()) {
            covered = sum(covered, Subspace::span_of(d, level));
        }
        const Matrix& kb = kernels[s].basis();
        for (std::size_t j = 0; j < kb.cols() && covered.dim() < kernels[s].dim(); ++j) {
            Vector v = kb.column(j);
            if (!covered.contains(v)) {
                chains.push_back({s, v});
                std::vector<Vector> one{v};
                covered = sum(covered, Subspace::span_of(d, one));
            }
        }
    }

    JordanBasis jb;
    std::vector<Vector> cols;
    cols.reserve(d);
    for (const auto& c : chains) {
        jb.type.blocks.push_back(c.size);
        std::vector<Vector> chain{c.top};
        for (std::size_t k = 1; k < c.size; ++k) {
            chain.push_back(n.apply(chain.back()));
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            cols.push_back(std::move(*it));
        }
    }
    jb.basis = Matrix::from_columns(d, cols);
    auto inv = inverse(jb.basis);
    if (!inv) {
        throw std::logic_error("jordan_basis: chain vectors are dependent");
    }
    jb.basis_inverse = std::move(*inv);
    return jb;
}

Subspace cyclic_subspace(const Matrix& a, const Vector& x) {
    if (!a.is_square() || a.cols() != x.size()) {
        throw InputError("cyclic_subspace: dimension mismatch");
    }
    const std::size_t d = x.size();
    std::vector<Vector> krylov;
    Subspace span(d);
    Vector v = x;
    while (!is_zero(v) && !span.contains(v)) {
        krylov.push_back(v);
        span = Subspace::span_of(d, krylov);
        v = a.apply(v);
    }
    return span;
}

CyclicChain cyclic_chain(const Matrix& n, const Vector& x) {
    if (!n.is_square() || n.cols() != x.size()) {
        throw InputError("cyclic_chain: dimension mismatch");
    }
    const std::size_t d = x.size();
    CyclicChain out;
    out.generator = x;
    Vector v = x;
    while (!is_zero(v)) {
        out.krylov.push_back(v);
        if (out.krylov.size() > d) {
            throw PreconditionError("not nilpotent");
        }
        v = n.apply(v);
    }
    if (out.krylov.empty()) {
        return out;
    }
    out.height = out.krylov.size() - 1;
    std::vector<Vector> gens;
    for (std::size_t j = 0; j <= out.height; ++j) {
        gens.push_back(out.krylov[out.height - j]);
        out.chain.push_back(Subspace::span_of(d, gens));
    }
    return out;
}

CycleReport cycle_check(const Matrix& n, const Vector& x, const VectorSample& coefficients) {
    CyclicChain ch = cyclic_chain(n, x);
    CycleReport report;
    if (ch.krylov.empty()) {
        return report;
    }
    VectorSample coef = coefficients;
    coef.ambient = ch.krylov.size();
    const std::size_t d = x.size();
    for (const auto& c : coef.vectors()) {
        Vector y(d);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_zero()) {
                y = y + c[i] * ch.krylov[i];
            }
        }
        if (is_zero(y)) {
            continue;
        }
        ++report.checked;
        Subspace cy = cyclic_subspace(n, y);
        bool on_chain = std::any_of(ch.chain.begin(), ch.chain.end(), [&](const Subspace& s) { return s == cy; });
        if (!on_chain) {
            report.violations.push_back(std::move(y));
        }
    }
    return report;
}

std::size_t PrimaryDecomposition::offset(std::size_t j) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < j; ++k) {
        off += components[k].basis.cols();
    }
    return off;
}

PrimaryDecomposition primary_decompose(const Matrix& a, const std::vector<Scalar>& spectrum) {
    require_square(a, "primary_decompose");
    const std::size_t d = a.rows();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        for (std::size_t j = i + 1; j < spectrum.size(); ++j) {
            if (spectrum[i] == spectrum[j]) {
                throw InputError("duplicate eigenvalue " + spectrum[i].to_string());
            }
        }
    }
    PrimaryDecomposition pd;
    Matrix product = Matrix::identity(d);
    std::vector<Vector> all_columns;
    for (const auto& lambda : spectrum) {
        Matrix shifted = a - lambda * Matrix::identity(d);
        Matrix p = shifted;
        Subspace kernel = nullspace(p);
        if (kernel.is_zero()) {
            throw InputError("spectrum incomplete/incorrect: " + lambda.to_string() + " is not an eigenvalue");
        }
        std::size_t exponent = 1;
        while (true) {
            Matrix next = p * shifted;
            Subspace next_kernel = nullspace(next);
            if (next_kernel.dim() == kernel.dim()) {
                break;
            }
            p = std::move(next);
            kernel = std::move(next_kernel);
            ++exponent;
        }
        product = product * p;

        // Restriction of (A - lambda) to V_j in the canonical basis W of V_j:
        // (A - lambda) W = W R, and W is the identity on its pivot rows.
        const Matrix& w = kernel.basis();
        Matrix r = (shifted * w).select_rows(kernel.pivots());
        JordanBasis jb = jordan_basis(r);

        PrimaryComponent comp;
        comp.eigenvalue = lambda;
        comp.exponent = exponent;
        comp.space = kernel;
        comp.basis = w * jb.basis;
        comp.nilpotent = jordan_matrix(jb.type);
        comp.type = jb.type;
        for (auto& c : comp.basis.columns()) {
            all_columns.push_back(std::move(c));
        }
        pd.components.push_back(std::move(comp));
    }
    if (!product.is_zero()) {
        throw InputError("spectrum incomplete/incorrect: product of (A - lambda_j)^{n_j} is not zero");
    }
    pd.change_of_basis = Matrix::from_columns(d, all_columns);
    auto inv = inverse(pd.change_of_basis);
    if (!inv) {
        throw std::logic_error("primary_decompose: components are not independent");
    }
    pd.change_of_basis_inverse = std::move(*inv);
    return pd;
}

std::optional<Matrix> nilpotent_similarity(const Matrix& n1, const Matrix& n2) {
    require_square(n1, "nilpotent_similarity");
    require_square(n2, "nilpotent_similarity");
    if (n1.rows() != n2.rows()) {
        throw InputError("nilpotent_similarity: dimensions differ");
    }
    JordanBasis b1 = jordan_basis(n1);
    JordanBasis b2 = jordan_basis(n2);
    if (b1.type != b2.type) {
        return std::nullopt;
    }
    return b2.basis * b1.basis_inverse;
}

std::vector<std::vector<std::size_t>> group_by_similarity(const PrimaryDecomposition& pd) {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<JordanType> keys;
    for (std::size_t j = 0; j < pd.components.size(); ++j) {
        auto it = std::find(keys.begin(), keys.end(), pd.components[j].type);
        if (it == keys.end()) {
            keys.push_back(pd.components[j].type);
            groups.push_back({j});
        } else {
            groups[static_cast<std::size_t>(it - keys.begin())].push_back(j);
        }
    }
    return groups;
}

}  // namespace latcol
