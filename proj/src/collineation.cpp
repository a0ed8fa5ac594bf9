#include "latcol/collineation.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"

namespace latcol {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::MemberExact:
            return "MemberExact";
        case Verdict::MemberSampled:
            return "MemberSampled";
        case Verdict::NonMember:
            return "NonMember";
        case Verdict::NotInvertible:
            return "NotInvertible";
    }
    return "?";
}

std::string to_string(Direction d) { return d == Direction::Forward ? "T" : "T^-1"; }

namespace {

Matrix require_inverse(const Matrix& t) {
    auto inv = inverse(t);
    if (!inv) {
        throw PreconditionError("T is not invertible");
    }
    return std::move(*inv);
}

std::vector<Vector> unit_vectors(std::size_t d) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k < d; ++k) {
        out.push_back(unit_vector(d, k));
    }
    return out;
}

// Tests one candidate against the conjugates forward = T^{-1} A T and
// backward = T A T^{-1}: T M is A-invariant iff M is forward-invariant.
struct CandidateTester {
    const Matrix& a;
    Matrix forward;
    Matrix backward;

    CandidateTester(const Matrix& a_, const Matrix& t, const Matrix& t_inv)
        : a(a_), forward(t_inv * a_ * t), backward(t * a_ * t_inv) {}

    std::optional<Witness> operator()(const Subspace& m, const std::string& source) const {
        if (!is_invariant(a, m)) {
            return std::nullopt;
        }
        if (!is_invariant(forward, m)) {
            return Witness{m, Direction::Forward, source};
        }
        if (!is_invariant(backward, m)) {
            return Witness{m, Direction::Inverse, source};
        }
        return std::nullopt;
    }
};

std::string permutation_string(const std::vector<std::size_t>& pi) {
    std::string out = "[";
    for (std::size_t k = 0; k < pi.size(); ++k) {
        out += (k > 0 ? " " : "") + std::to_string(pi[k]);
    }
    return out + "]";
}

}  // namespace

bool verify_witness(const Matrix& a, const Matrix& t, const Witness& w) {
    if (!is_invariant(a, w.subspace)) {
        return false;
    }
    auto inv = inverse(t);
    if (!inv) {
        return false;
    }
    const Matrix& map = w.direction == Direction::Forward ? t : *inv;
    return !is_invariant(a, image(map, w.subspace));
}

// ---------------------------------------------------------------------------
// CyclicSampler

CyclicSampler::CyclicSampler(const Matrix& n, const VectorSample& sample) : n_(n), seed_(sample.seed) {
    if (!n.is_square()) {
        throw InputError("sampled check: N must be square");
    }
    const std::size_t d = n.rows();
    basis_ = jordan_basis(n);
    jordan_ = jordan_matrix(basis_.type);
    jordan_input_ = basis_.basis == Matrix::identity(d);
    std::size_t off = 0;
    for (auto b : basis_.type.blocks) {
        offsets_.push_back(off);
        sizes_.push_back(b);
        off += b;
    }

    VectorSample s = sample;
    s.ambient = d;
    std::set<Vector> seen;
    std::map<Vector, std::size_t> key_ids;
    for (auto& v : s.vectors()) {
        if (is_zero(v) || !seen.insert(projective_normalize(v)).second) {
            continue;
        }
        Probe p;
        p.x = jordan_input_ ? v : basis_.basis_inverse.apply(v);
        p.original = std::move(v);
        for (std::size_t c = 0; c < d; ++c) {
            if (!p.x[c].is_zero()) {
                p.support.push_back(c);
            }
        }
        // Height is the largest local index of a nonzero entry over all blocks;
        // the first block attaining it carries the normalization.
        std::size_t star = offsets_.size();
        for (std::size_t b = 0; b < offsets_.size(); ++b) {
            for (std::size_t i = sizes_[b]; i-- > 0;) {
                if (!p.x[offsets_[b] + i].is_zero()) {
                    if (star == offsets_.size() || i > p.height) {
                        p.height = i;
                        star = b;
                    }
                    break;
                }
            }
        }
        const std::size_t h = p.height;
        const std::size_t o = offsets_[star];
        // q(N) x with q chosen so that block `star` of the result is e_h;
        // q(N) x generates the same cyclic subspace and is unique for it.
        const Scalar lead_inv = p.x[o + h].inverse();
        Vector q(h + 1);
        q[0] = lead_inv;
        for (std::size_t m = 1; m <= h; ++m) {
            const std::size_t i = h - m;
            Scalar acc(0);
            for (std::size_t l = 0; l < m; ++l) {
                acc += q[l] * p.x[o + i + l];
            }
            q[m] = -(acc * lead_inv);
        }
        Vector g(d);
        for (std::size_t l = 0; l <= h; ++l) {
            if (!q[l].is_zero()) {
                g = g + q[l] * shift(p.x, l);
            }
        }
        auto [it, inserted] = key_ids.try_emplace(g, keys_.size());
        if (inserted) {
            Key k;
            k.lead = o + h;
            k.krylov.push_back(std::move(g));
            for (std::size_t l = 1; l <= h; ++l) {
                k.krylov.push_back(shift(k.krylov.back(), 1));
            }
            keys_.push_back(std::move(k));
        }
        p.key = it->second;
        probes_.push_back(std::move(p));
    }
}

Vector CyclicSampler::shift(const Vector& v, std::size_t by) const {
    Vector out(v.size());
    for (std::size_t b = 0; b < offsets_.size(); ++b) {
        for (std::size_t i = 0; i + by < sizes_[b]; ++i) {
            out[offsets_[b] + i] = v[offsets_[b] + i + by];
        }
    }
    return out;
}

bool CyclicSampler::key_invariant(const Key& k, const Matrix& m) const {
    const std::size_t h = k.krylov.size() - 1;
    for (const auto& kv : k.krylov) {
        Vector w = m.apply(kv);
        // N^l g has a unit entry at lead - l where all other N^{l'} g vanish.
        for (std::size_t l = 0; l <= h; ++l) {
            const Scalar c = w[k.lead - l];
            if (c.is_zero()) {
                continue;
            }
            const Vector& basis = k.krylov[l];
            for (std::size_t r = 0; r < w.size(); ++r) {
                if (!basis[r].is_zero()) {
                    w[r] -= c * basis[r];
                }
            }
        }
        if (!is_zero(w)) {
            return false;
        }
    }
    return true;
}

bool CyclicSampler::height_kept(const Probe& p, const Matrix& t) const {
    for (std::size_t b = 0; b < offsets_.size(); ++b) {
        if (sizes_[b] <= p.height) {
            continue;
        }
        const std::size_t row = offsets_[b] + p.height;
        Scalar dot(0);
        for (auto c : p.support) {
            const Scalar& e = t(row, c);
            if (!e.is_zero()) {
                dot += e * p.x[c];
            }
        }
        if (!dot.is_zero()) {
            return true;
        }
    }
    return false;
}

SampledResult CyclicSampler::check(const Matrix& t) const {
    const std::size_t d = n_.rows();
    if (t.rows() != d || t.cols() != d) {
        throw InputError("sampled check: T must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    const Matrix tj = jordan_input_ ? t : basis_.basis_inverse * t * basis_.basis;
    const Matrix tj_inv = require_inverse(tj);
    const Matrix forward = tj_inv * jordan_ * tj;
    const Matrix backward = tj * jordan_ * tj_inv;
    std::vector<signed char> fwd_ok(keys_.size(), -1);
    std::vector<signed char> bwd_ok(keys_.size(), -1);
    auto cached = [&](std::vector<signed char>& cache, std::size_t key, const Matrix& m) {
        if (cache[key] < 0) {
            cache[key] = key_invariant(keys_[key], m) ? 1 : 0;
        }
        return cache[key] == 1;
    };

    SampledResult result;
    for (const auto& p : probes_) {
        ++result.tested;
        std::optional<Witness> w;
        if (!cached(fwd_ok, p.key, forward)) {
            w = Witness{cyclic_subspace(jordan_, p.x), Direction::Forward, "sampled cyclic subspace"};
            result.failed_check = "T(N)_x is not invariant";
        } else if (!height_kept(p, tj)) {
            w = Witness{cyclic_subspace(jordan_, tj.apply(p.x)), Direction::Inverse, "sampled cyclic subspace"};
            result.failed_check = "(N)_{Tx} is smaller than T(N)_x";
        } else if (!cached(bwd_ok, p.key, backward)) {
            w = Witness{cyclic_subspace(jordan_, p.x), Direction::Inverse, "sampled cyclic subspace"};
            result.failed_check = "T^-1(N)_x is not invariant";
        } else if (!height_kept(p, tj_inv)) {
            w = Witness{cyclic_subspace(jordan_, tj_inv.apply(p.x)), Direction::Forward, "sampled cyclic subspace"};
            result.failed_check = "(N)_{T^-1 x} is smaller than T^-1(N)_x";
        }
        if (w) {
            if (!jordan_input_) {
                w->subspace = image(basis_.basis, w->subspace);
            }
            if (!verify_witness(n_, t, *w)) {
                throw std::logic_error("sampled check produced an invalid certificate");
            }
            result.passed = false;
            result.counterexample = p.original;
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

SampledResult col_check_sampled(const Matrix& n, const Matrix& t, const VectorSample& sample) {
    return CyclicSampler(n, sample).check(t);
}

std::optional<Witness> first_subspace_failure(const Matrix& n, const Matrix& t, std::span<const Subspace> family) {
    CandidateTester test(n, t, require_inverse(t));
    for (const auto& m : family) {
        if (auto w = test(m, "subspace family")) {
            return w;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed-form deciders and certificates

Matrix ColParamJ2J2::realize() const {
    const auto& g = gamma;
    return Matrix{{g[0], g[1], g[2], g[3]},
                  {0, t * g[0], 0, t * g[2]},
                  {g[4], g[5], g[6], g[7]},
                  {0, t * g[4], 0, t * g[6]}};
}

bool ColParamJ2J2::nondegenerate() const {
    return !t.is_zero() && !(gamma[0] * gamma[6] - gamma[2] * gamma[4]).is_zero();
}

std::optional<ColParamJ2J2> col_j2j2_decide(const Matrix& t) {
    if (t.rows() != 4 || t.cols() != 4) {
        return std::nullopt;
    }
    ColParamJ2J2 p;
    for (std::size_t c = 0; c < 4; ++c) {
        p.gamma[c] = t(0, c);
        p.gamma[4 + c] = t(2, c);
    }
    if (!p.gamma[0].is_zero()) {
        p.t = t(1, 1) / p.gamma[0];
    } else if (!p.gamma[2].is_zero()) {
        p.t = t(1, 3) / p.gamma[2];
    } else {
        return std::nullopt;
    }
    if (!p.nondegenerate() || p.realize() != t) {
        return std::nullopt;
    }
    return p;
}

bool col_single_chain_decide(const Matrix& n, const Matrix& t) {
    if (jordan_type(n).nontrivial_blocks() > 1) {
        throw PreconditionError("single-chain rule needs at most one Jordan block of size >= 2");
    }
    return is_invertible(t) && alg_lat_commutant(n).contains(t);
}

SeparatorCertificate diagonal_separator(const Matrix& n) {
    JordanBasis jb = jordan_basis(n);
    if (jb.type.nontrivial_blocks() < 2) {
        throw PreconditionError("separator needs at least two Jordan blocks of size >= 2, got type " +
                                jb.type.to_string());
    }
    const std::size_t d = n.rows();
    const std::size_t n1 = jb.type.blocks[0];
    Vector diag(d, Scalar(1));
    diag[n1 + 1] = Scalar(2);
    const Matrix dj = Matrix::diagonal(diag);
    std::vector<Vector> plane{unit_vector(d, 0) + unit_vector(d, n1), unit_vector(d, 1) + unit_vector(d, n1 + 1)};
    const Subspace kj = Subspace::span_of(d, plane);

    SeparatorCertificate cert;
    cert.d = jb.basis * dj * jb.basis_inverse;
    cert.k = image(jb.basis, kj);
    cert.d_invertible = is_invertible(cert.d);
    cert.d_in_alg_lat = alg_lat_commutant(n).contains(cert.d);
    cert.k_invariant = is_invariant(n, cert.k);
    cert.dk_not_invariant = !is_invariant(n, image(cert.d, cert.k));
    return cert;
}

std::optional<Matrix> commutant_witness(const Matrix& n, const Matrix& t, const Vector& x) {
    if (!n.is_square() || t.rows() != n.rows() || t.cols() != n.cols() || x.size() != n.rows()) {
        throw InputError("commutant_witness: dimension mismatch");
    }
    const OperatorSpace comm = commutant(n);
    std::vector<Vector> images;
    for (const auto& b : comm.basis()) {
        images.push_back(b.apply(x));
    }
    auto sol = solve_linear(Matrix::from_columns(n.rows(), images), t.apply(x));
    if (!sol) {
        return std::nullopt;
    }
    Matrix b = comm.combine(sol->particular);
    const Subspace cx = cyclic_subspace(n, x);
    if (image(t, cx) != image(b, cx)) {
        return std::nullopt;
    }
    return b;
}

bool CyclicImageReport::passed() const {
    for (bool b : image_is_cyclic) {
        if (!b) {
            return false;
        }
    }
    for (bool b : cyclic_commutes) {
        if (!b) {
            return false;
        }
    }
    return top_annihilated;
}

CyclicImageReport cyclic_image_check(const Matrix& n, const Matrix& t, const Vector& x) {
    const CyclicChain ch = cyclic_chain(n, x);
    CyclicImageReport report;
    if (ch.krylov.empty()) {
        report.top_annihilated = true;
        return report;
    }
    const std::size_t h = ch.height;
    report.height = h;
    const Vector tx = t.apply(x);
    std::vector<Vector> powers_tx{tx};
    for (std::size_t k = 1; k <= h; ++k) {
        powers_tx.push_back(n.apply(powers_tx.back()));
    }
    for (std::size_t j = 0; j <= h; ++j) {
        const Vector& z = ch.krylov[h - j];
        const Vector tz = t.apply(z);
        const Subspace cyc_tz = cyclic_subspace(n, tz);
        report.image_is_cyclic.push_back(image(t, cyclic_subspace(n, z)) == cyc_tz);
        report.cyclic_commutes.push_back(cyc_tz == cyclic_subspace(n, powers_tx[h - j]));
    }
    report.top_annihilated = is_zero(n.apply(t.apply(ch.krylov[h])));
    return report;
}

std::vector<std::size_t> extract_permutation(const PrimaryDecomposition& pd, const Matrix& t) {
    const std::size_t s = pd.components.size();
    std::vector<std::size_t> pi(s, s);
    std::vector<bool> hit(s, false);
    for (std::size_t j = 0; j < s; ++j) {
        const Subspace img = image(t, pd.components[j].space);
        for (std::size_t i = 0; i < s; ++i) {
            if (pd.components[i].space == img) {
                pi[j] = i;
                break;
            }
        }
        if (pi[j] == s || hit[pi[j]]) {
            throw PreconditionError("no permutation: T does not permute the primary components");
        }
        hit[pi[j]] = true;
    }
    return pi;
}

Matrix build_swap_collineation(const PrimaryDecomposition& pd, std::size_t j, std::size_t k) {
    const std::size_t s = pd.components.size();
    if (j >= s || k >= s || j == k) {
        throw InputError("swap: component indices must be distinct and below " + std::to_string(s));
    }
    auto sim = nilpotent_similarity(pd.components[j].nilpotent, pd.components[k].nilpotent);
    if (!sim) {
        throw PreconditionError("not similar: components " + std::to_string(j) + " and " + std::to_string(k) +
                                " have Jordan types " + pd.components[j].type.to_string() + " and " +
                                pd.components[k].type.to_string());
    }
    const Matrix s_inv = require_inverse(*sim);
    Matrix tp(pd.dimension(), pd.dimension());
    for (std::size_t c = 0; c < s; ++c) {
        const std::size_t dc = pd.components[c].basis.cols();
        if (c != j && c != k) {
            tp.set_block(pd.offset(c), pd.offset(c), Matrix::identity(dc));
        }
    }
    tp.set_block(pd.offset(k), pd.offset(j), *sim);
    tp.set_block(pd.offset(j), pd.offset(k), s_inv);
    return pd.change_of_basis * tp * pd.change_of_basis_inverse;
}

// ---------------------------------------------------------------------------
// ColChecker

struct ColChecker::TypeData {
    JordanType type;
    Matrix jordan;
    std::vector<Subspace> generators;
    std::vector<Subspace> closure;
    std::unique_ptr<CyclicSampler> sampler;
};

struct ColChecker::FactorOutcome {
    Verdict verdict = Verdict::MemberExact;
    std::string rule;
    std::optional<Witness> witness;  // in factor coordinates
    std::size_t tested = 0;
};

namespace {

bool is_j2j2(const JordanType& t) { return t.blocks == std::vector<std::size_t>{2, 2}; }

std::optional<Witness> search_factor(const JordanType& type, const Matrix& jordan, const std::vector<Subspace>& closure,
                                     const Matrix& tk, const Matrix& tk_inv, const VectorSample& sample) {
    const std::size_t d = jordan.rows();
    CandidateTester test(jordan, tk, tk_inv);
    for (const auto& m : closure) {
        if (auto w = test(m, "hyperinvariant subspace")) {
            return w;
        }
    }
    // Cyclic subspaces of basis vectors: in Jordan coordinates these cover
    // every ker N^j and ran N^j basis vector together with its preimages.
    for (const auto& e : unit_vectors(d)) {
        if (auto w = test(cyclic_subspace(jordan, e), "cyclic subspace of a basis vector")) {
            return w;
        }
    }
    std::vector<std::size_t> offsets;
    std::size_t off = 0;
    for (auto b : type.blocks) {
        offsets.push_back(off);
        off += b;
    }
    for (std::size_t a = 0; a < type.blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < type.blocks.size(); ++b) {
            if (type.blocks[a] < 2 || type.blocks[b] < 2) {
                continue;
            }
            std::vector<Vector> plane{unit_vector(d, offsets[a]) + unit_vector(d, offsets[b]),
                                      unit_vector(d, offsets[a] + 1) + unit_vector(d, offsets[b] + 1)};
            if (auto w = test(Subspace::span_of(d, plane), "separator plane")) {
                return w;
            }
        }
    }
    if (is_j2j2(type)) {
        for (const auto& e : lat_j2j2_sample()) {
            if (auto w = test(e.realized, "J2+J2 lattice grid")) {
                return w;
            }
        }
    }
    SampledResult r = CyclicSampler(jordan, sample).check(tk);
    return r.witness;
}

}  // namespace

ColChecker::ColChecker(const Matrix& a, const std::vector<Scalar>& spectrum, VectorSample sample)
    : a_(a), pd_(primary_decompose(a, spectrum)), sample_(sample) {
    for (const auto& c : pd_.components) {
        std::size_t idx = types_.size();
        for (std::size_t k = 0; k < types_.size(); ++k) {
            if (types_[k]->type == c.type) {
                idx = k;
            }
        }
        if (idx == types_.size()) {
            auto td = std::make_unique<TypeData>();
            td->type = c.type;
            td->jordan = c.nilpotent;
            HyperinvariantGenerators h = hyperinvariant_generators(td->jordan);
            td->generators = std::move(h.generators);
            td->closure = std::move(h.closure);
            if (td->type.nontrivial_blocks() >= 2 && !is_j2j2(td->type)) {
                td->sampler = std::make_unique<CyclicSampler>(td->jordan, sample_);
            }
            types_.push_back(std::move(td));
        }
        type_of_component_.push_back(idx);
    }
}

ColChecker::~ColChecker() = default;
ColChecker::ColChecker(ColChecker&&) noexcept = default;
ColChecker& ColChecker::operator=(ColChecker&&) noexcept = default;

ColChecker::FactorOutcome ColChecker::check_factor(const TypeData& td, const Matrix& tk) const {
    FactorOutcome out;
    const Matrix& j = td.jordan;
    if (j * tk == tk * j) {
        out.rule = "commutant";
        return out;
    }
    const Matrix tk_inv = require_inverse(tk);
    for (const auto& h : td.generators) {
        if (!is_invariant(tk, h)) {
            out.verdict = Verdict::NonMember;
            out.rule = "alg-lat filter: moves " + h.to_string();
            out.witness = search_factor(td.type, j, td.closure, tk, tk_inv, sample_);
            return out;
        }
    }
    if (td.type.nontrivial_blocks() <= 1) {
        out.rule = "single-chain: invertible in alg-lat";
        return out;
    }
    if (is_j2j2(td.type)) {
        if (auto p = col_j2j2_decide(tk)) {
            out.rule = "j2j2 closed form: t=" + p->t.to_string();
            return out;
        }
        out.verdict = Verdict::NonMember;
        out.rule = "j2j2 closed form violated";
        out.witness = search_factor(td.type, j, td.closure, tk, tk_inv, sample_);
        return out;
    }
    SampledResult r = td.sampler->check(tk);
    out.tested = r.tested;
    if (r.passed) {
        out.verdict = Verdict::MemberSampled;
        out.rule = "sampled: " + std::to_string(r.tested) + " vectors";
    } else {
        out.verdict = Verdict::NonMember;
        out.rule = "sampled: " + r.failed_check;
        out.witness = std::move(r.witness);
    }
    return out;
}

std::optional<Witness> ColChecker::search_original(const Matrix& t, const Matrix& t_inv) const {
    const std::size_t d = a_.rows();
    CandidateTester test(a_, t, t_inv);
    for (const auto& c : pd_.components) {
        if (auto w = test(c.space, "primary component")) {
            return w;
        }
    }
    // Cyclic subspaces of component basis vectors and their pairwise sums,
    // then of the primary parts of their images under T and T^{-1}.
    std::vector<Vector> seeds;
    for (const auto& c : pd_.components) {
        auto cols = c.basis.columns();
        for (std::size_t a = 0; a < cols.size(); ++a) {
            seeds.push_back(cols[a]);
        }
        for (std::size_t a = 0; a < cols.size(); ++a) {
            for (std::size_t b = a + 1; b < cols.size(); ++b) {
                seeds.push_back(cols[a] + cols[b]);
            }
        }
    }
    VectorSample smp = sample_;
    smp.ambient = d;
    for (auto& v : smp.vectors()) {
        seeds.push_back(std::move(v));
    }
    auto primary_parts = [&](const Vector& v) {
        std::vector<Vector> parts;
        const Vector coords = pd_.change_of_basis_inverse.apply(v);
        for (std::size_t c = 0; c < pd_.components.size(); ++c) {
            const auto& comp = pd_.components[c];
            Vector local(coords.begin() + static_cast<std::ptrdiff_t>(pd_.offset(c)),
                         coords.begin() + static_cast<std::ptrdiff_t>(pd_.offset(c) + comp.basis.cols()));
            if (!is_zero(local)) {
                parts.push_back(comp.basis.apply(local));
            }
        }
        return parts;
    };
    for (const auto& x : seeds) {
        if (is_zero(x)) {
            continue;
        }
        if (auto w = test(cyclic_subspace(a_, x), "cyclic subspace")) {
            return w;
        }
        for (const Matrix* map : {&t, &t_inv}) {
            for (const auto& u : primary_parts(map->apply(x))) {
                if (auto w = test(cyclic_subspace(a_, u), "cyclic subspace of a primary part")) {
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

ColVerdict ColChecker::check(const Matrix& t) const {
    const std::size_t d = a_.rows();
    if (t.rows() != d || t.cols() != d) {
        throw InputError("colcheck: T must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    ColVerdict v;
    v.stats.seed = sample_.seed;
    auto t_inv_opt = inverse(t);
    if (!t_inv_opt) {
        v.verdict = Verdict::NotInvertible;
        v.decision_path.push_back("not invertible");
        return v;
    }
    const Matrix& t_inv = *t_inv_opt;
    v.decision_path.push_back("invertible");

    std::string types;
    for (const auto& c : pd_.components) {
        types += (types.empty() ? "" : " ") + c.eigenvalue.to_string() + ":" + c.type.to_string();
    }
    v.decision_path.push_back("primary decomposition: " + std::to_string(pd_.components.size()) +
                              " components " + types);
    const bool identity_basis = pd_.change_of_basis == Matrix::identity(d);
    if (!identity_basis) {
        v.decision_path.push_back("conjugated to Jordan coordinates");
    }
    const Matrix tp = identity_basis ? t : pd_.change_of_basis_inverse * t * pd_.change_of_basis;

    // Block (i, j) of tp maps component j into component i.
    const std::size_t s = pd_.components.size();
    std::vector<std::size_t> pi(s, s);
    std::vector<bool> hit(s, false);
    std::string failure;
    for (std::size_t j = 0; j < s && failure.empty(); ++j) {
        const std::size_t dj = pd_.components[j].basis.cols();
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t di = pd_.components[i].basis.cols();
            if (tp.block(pd_.offset(i), pd_.offset(j), di, dj).is_zero()) {
                continue;
            }
            if (pi[j] != s) {
                failure = "component " + std::to_string(j) + " is spread over several components";
                break;
            }
            pi[j] = i;
        }
        if (failure.empty() && hit[pi[j]]) {
            failure = "two components map into component " + std::to_string(pi[j]);
        }
        if (failure.empty()) {
            hit[pi[j]] = true;
            if (type_of_component_[pi[j]] != type_of_component_[j]) {
                failure = "component " + std::to_string(j) + " maps across similarity classes";
            }
        }
    }
    if (!failure.empty()) {
        v.verdict = Verdict::NonMember;
        v.decision_path.push_back("permutation: " + failure);
        v.witness = search_original(t, t_inv);
        if (!v.witness) {
            v.decision_path.push_back("no witness found");
        }
        return v;
    }
    v.permutation = pi;
    v.decision_path.push_back("permutation: " + permutation_string(pi));

    bool sampled = false;
    for (std::size_t k = 0; k < s; ++k) {
        const TypeData& td = *types_[type_of_component_[k]];
        const std::size_t dk = pd_.components[k].basis.cols();
        const Matrix tk = tp.block(pd_.offset(pi[k]), pd_.offset(k), dk, dk);
        FactorOutcome f = check_factor(td, tk);
        v.stats.vectors_tested += f.tested;
        v.decision_path.push_back("factor " + std::to_string(k) + " " + td.type.to_string() + ": " + f.rule);
        if (f.verdict == Verdict::NonMember) {
            v.verdict = Verdict::NonMember;
            if (f.witness) {
                // A forward witness lives in component k, an inverse one in pi(k).
                const std::size_t host = f.witness->direction == Direction::Forward ? k : pi[k];
                Witness w = *f.witness;
                w.subspace = Subspace::column_space(pd_.components[host].basis * f.witness->subspace.basis());
                if (!verify_witness(a_, t, w)) {
                    throw std::logic_error("colcheck produced an invalid certificate");
                }
                v.witness = std::move(w);
            } else {
                v.decision_path.push_back("no witness found");
            }
            return v;
        }
        sampled = sampled || f.verdict == Verdict::MemberSampled;
    }
    v.verdict = sampled ? Verdict::MemberSampled : Verdict::MemberExact;
    return v;
}

ColVerdict col_check(const Matrix& a, const Matrix& t, const std::vector<Scalar>& spectrum,
                     const VectorSample& sample) {
    return ColChecker(a, spectrum, sample).check(t);
}

}  // namespace latcol
