#include "latcol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <type_traits>

#include "latcol/collineation.hpp"
#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"
#include "latcol/sample.hpp"
#include "latcol/structure.hpp"

namespace latcol {

namespace {

// First failure wins; later checks only run while everything holds.
struct Outcome {
    bool ok = true;
    std::string detail;

    // `what` is a message or a callable producing one, evaluated only on failure.
    template <class What>
    bool require(bool cond, What&& what) {
        if (ok && !cond) {
            ok = false;
            if constexpr (std::is_invocable_v<What>) {
                detail = what();
            } else {
                detail = std::string(what);
            }
        }
        return cond;
    }
};

Matrix jordan_of(std::size_t m) { return Matrix::jordan_block(m); }

std::vector<JordanType> types_up_to(std::size_t max_dim) {
    std::vector<JordanType> out;
    for (std::size_t d = 1; d <= max_dim; ++d) {
        auto ts = jordan_types_of_dimension(d);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

OperatorSpace unit_pattern(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
    std::vector<Matrix> units;
    for (auto [r, c] : cells) {
        units.push_back(Matrix::unit(n, n, r, c));
    }
    return OperatorSpace::span_of(n, n, units);
}

Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix p(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                p(r, c) = Scalar(draw_int(rng, -2, 2));
            }
        }
        if (is_invertible(p)) {
            return p;
        }
    }
}

// A nilpotent of the given type in a random basis.
Matrix disguised_nilpotent(std::mt19937_64& rng, const JordanType& type) {
    const std::size_t n = type.dimension();
    Matrix p = random_invertible_matrix(rng, n);
    return p * jordan_matrix(type) * *inverse(p);
}

JordanType random_type(std::mt19937_64& rng, std::size_t dim) {
    auto ts = jordan_types_of_dimension(dim);
    return ts[static_cast<std::size_t>(draw_int(rng, 0, static_cast<std::int64_t>(ts.size()) - 1))];
}

// Distinct eigenvalues a + b i with a, b in [-3, 3].
std::vector<Scalar> distinct_eigenvalues(std::mt19937_64& rng, std::size_t count) {
    std::vector<Scalar> out;
    while (out.size() < count) {
        Scalar l(Rational(draw_int(rng, -3, 3)), Rational(draw_int(rng, -3, 3)));
        if (std::find(out.begin(), out.end(), l) == out.end()) {
            out.push_back(l);
        }
    }
    return out;
}

Matrix shifted(const Matrix& n, const Scalar& lambda) { return n + lambda * Matrix::identity(n.rows()); }

bool factor_rules_are(const ColVerdict& v, const std::string& rule) {
    bool any = false;
    for (const auto& step : v.decision_path) {
        if (step.starts_with("factor ")) {
            any = true;
            if (!step.ends_with(": " + rule)) {
                return false;
            }
        }
    }
    return any;
}

// 1. Intertwiners of two Jordan blocks.
Outcome suite_intertwiners() {
    Outcome o;
    std::size_t pairs = 0;
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const OperatorSpace got = intertwiners(jordan_of(m), jordan_of(n));
            const std::string tag = "J" + std::to_string(m) + ",J" + std::to_string(n);
            o.require(got == jordan_intertwiner_closed_form(m, n), tag + ": differs from closed form");
            o.require(got.dim() == std::min(m, n), tag + ": wrong dimension");
            ++pairs;
        }
    }
    o.detail = o.ok ? std::to_string(pairs) + " pairs" : o.detail;
    return o;
}

// 2. Algebra of the invariant-subspace lattice equals the blockwise closed form.
Outcome suite_alg_lat() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& type : types_up_to(8)) {
        const OperatorSpace al = alg_lat_commutant(jordan_matrix(type));
        o.require(al == refl_blockwise(type), [&] { return "type " + type.to_string() + ": alg-lat differs from blockwise form"; });
        ++count;
        if (!o.ok) {
            return o;
        }
    }
    const JordanType t22{{2, 2}};
    const OperatorSpace a22 = alg_lat_commutant(jordan_matrix(t22));
    o.require(a22.dim() == 12, [&] { return "{2,2}: dimension " + std::to_string(a22.dim()) + " != 12"; });
    const OperatorSpace pattern = unit_pattern(4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 3},
                                                   {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 3}});
    o.require(a22 == pattern, "{2,2}: alg-lat does not match the display pattern");
    const std::size_t d32 = alg_lat_commutant(jordan_matrix(JordanType{{3, 2}})).dim();
    o.require(d32 == 15, [&] { return "{3,2}: dimension " + std::to_string(d32) + " != 15"; });
    o.detail = o.ok ? std::to_string(count) + " types" : o.detail;
    return o;
}

// 3. Commutant dimensions.
Outcome suite_commutant() {
    Outcome o;
    const OperatorSpace c22 = commutant(jordan_matrix(JordanType{{2, 2}}));
    o.require(c22.dim() == 8, [&] { return "{2,2}: commutant dimension " + std::to_string(c22.dim()) + " != 8"; });
    std::vector<Matrix> toeplitz;
    for (std::size_t bi = 0; bi < 2; ++bi) {
        for (std::size_t bj = 0; bj < 2; ++bj) {
            const std::size_t r = 2 * bi;
            const std::size_t c = 2 * bj;
            toeplitz.push_back(Matrix::unit(4, 4, r, c) + Matrix::unit(4, 4, r + 1, c + 1));
            toeplitz.push_back(Matrix::unit(4, 4, r, c + 1));
        }
    }
    o.require(c22 == OperatorSpace::span_of(4, 4, toeplitz), "{2,2}: commutant is not blockwise Toeplitz");
    std::size_t count = 0;
    for (const auto& type : types_up_to(8)) {
        std::size_t expected = 0;
        for (auto a : type.blocks) {
            for (auto b : type.blocks) {
                expected += std::min(a, b);
            }
        }
        const std::size_t got = commutant(jordan_matrix(type)).dim();
        o.require(got == expected, [&] { return "type " + type.to_string() + ": commutant dimension " + std::to_string(got) +
                                       " != " + std::to_string(expected); });
        ++count;
    }
    o.detail = o.ok ? std::to_string(count) + " types" : o.detail;
    return o;
}

// 4. Two or more nontrivial blocks: a separator exists. Otherwise every
// invertible element of the alg-lat algebra is a collineation.
Outcome suite_dichotomy() {
    Outcome o;
    std::size_t separated = 0;
    std::size_t members = 0;
    std::uint64_t type_index = 0;
    for (const auto& type : types_up_to(7)) {
        ++type_index;
        const Matrix n = jordan_matrix(type);
        const std::string tag = "type " + type.to_string();
        if (type.nontrivial_blocks() >= 2) {
            o.require(diagonal_separator(n).verified(), tag + ": separator certificate fails");
            ++separated;
            continue;
        }
        const OperatorSpace al = alg_lat_commutant(n);
        const ColChecker checker(n, {Scalar(0)});
        const CyclicSampler sampler(n, VectorSample{n.rows(), 0, 0});
        std::mt19937_64 rng(4000 + type_index);
        for (int k = 0; k < 100 && o.ok; ++k) {
            auto t = random_invertible_element(al, rng);
            if (!o.require(t.has_value(), tag + ": no invertible element drawn")) {
                break;
            }
            const ColVerdict v = checker.check(*t);
            o.require(v.verdict == Verdict::MemberExact, [&] { return tag + ": element " + t->to_string() + " is " +
                                                             to_string(v.verdict); });
            const SampledResult r = sampler.check(*t);
            o.require(r.passed, [&] { return tag + ": sampled counterexample " +
                                    (r.counterexample ? to_string(*r.counterexample) : std::string("?")); });
            ++members;
        }
    }
    o.detail = o.ok ? std::to_string(separated) + " separated types, " + std::to_string(members) + " members"
                    : o.detail;
    return o;
}

// 5. J_2 (+) J_2: the closed form against the sampled check, both ways.
Outcome suite_j2j2() {
    Outcome o;
    const Matrix n = jordan_matrix(JordanType{{2, 2}});
    std::vector<Subspace> lattice;
    for (auto& e : lat_j2j2_sample()) {
        lattice.push_back(std::move(e.realized));
    }
    const CyclicSampler sampler(n, VectorSample{4, 0, 1000});
    const ColChecker checker(n, {Scalar(0)});
    std::mt19937_64 rng(5);

    for (int k = 0; k < 500 && o.ok; ++k) {
        ColParamJ2J2 p;
        do {
            p.t = draw_rational(rng);
            for (auto& g : p.gamma) {
                g = draw_rational(rng);
            }
        } while (!p.nondegenerate());
        const Matrix t = p.realize();
        o.require(col_j2j2_decide(t).has_value(), [&] { return "closed-form matrix not recognised: " + t.to_string(); });
        o.require(sampler.check(t).passed, [&] { return "closed-form matrix fails the sampled check: " + t.to_string(); });
        o.require(!first_subspace_failure(n, t, lattice), [&] { return "closed-form matrix moves a lattice element: " +
                                                              t.to_string(); });
    }
    const OperatorSpace al = alg_lat_commutant(n);
    int refuted = 0;
    while (refuted < 500 && o.ok) {
        auto t = random_invertible_element(al, rng);
        if (!o.require(t.has_value(), "no invertible alg-lat element drawn")) {
            break;
        }
        if (col_j2j2_decide(*t)) {
            continue;
        }
        const ColVerdict v = checker.check(*t);
        o.require(v.verdict == Verdict::NonMember && v.witness && verify_witness(n, *t, *v.witness), [&] { return "not refuted with a witness: " + t->to_string(); });
        o.require(!sampler.check(*t).passed, [&] { return "sampled check accepts a refuted matrix: " + t->to_string(); });
        ++refuted;
    }
    o.detail = o.ok ? "500 accepted, " + std::to_string(refuted) + " refuted, " + std::to_string(sampler.size()) +
                          " probes, " + std::to_string(lattice.size()) + " lattice elements"
                    : o.detail;
    return o;
}

// 6. Invertible commutant elements are exact members.
Outcome suite_commutant_members() {
    Outcome o;
    std::size_t count = 0;
    std::uint64_t type_index = 0;
    for (const auto& type : types_up_to(6)) {
        ++type_index;
        const Matrix n = jordan_matrix(type);
        const OperatorSpace c = commutant(n);
        const ColChecker checker(n, {Scalar(0)});
        std::mt19937_64 rng(6000 + type_index);
        for (int k = 0; k < 200 && o.ok; ++k) {
            auto t = random_invertible_element(c, rng);
            if (!o.require(t.has_value(), [&] { return "type " + type.to_string() + ": no invertible element drawn"; })) {
                break;
            }
            const ColVerdict v = checker.check(*t);
            o.require(v.verdict == Verdict::MemberExact && factor_rules_are(v, "commutant"), [&] { return "type " + type.to_string() + ": " + t->to_string() + " gives " + to_string(v.verdict); });
            ++count;
        }
    }
    o.detail = o.ok ? std::to_string(count) + " elements" : o.detail;
    return o;
}

// 7. Cyclic images under certified members.
Outcome suite_cyclic_images() {
    Outcome o;
    std::vector<JordanType> types;
    for (const auto& t : types_up_to(5)) {
        if (t.dimension() >= 2) {
            types.push_back(t);
        }
    }
    std::mt19937_64 rng(7);
    std::size_t checks = 0;
    for (std::size_t i = 0; i < 100 && o.ok; ++i) {
        const JordanType& type = types[i % types.size()];
        const Matrix n = jordan_matrix(type);
        std::optional<Matrix> t;
        if (i % 2 == 1 && type.blocks == std::vector<std::size_t>{2, 2}) {
            ColParamJ2J2 p;
            do {
                p.t = Scalar(draw_int(rng, 1, 3));
                for (auto& g : p.gamma) {
                    g = Scalar(draw_int(rng, -3, 3));
                }
            } while (!p.nondegenerate());
            t = p.realize();
        } else if (i % 2 == 1 && type.nontrivial_blocks() <= 1) {
            t = random_invertible_element(alg_lat_commutant(n), rng);
        } else {
            t = random_invertible_element(commutant(n), rng);
        }
        if (!o.require(t.has_value(), [&] { return "type " + type.to_string() + ": no invertible element drawn"; })) {
            break;
        }
        const ColVerdict v = col_check(n, *t, {Scalar(0)});
        if (!o.require(v.verdict == Verdict::MemberExact, [&] { return "member not certified: " + t->to_string(); })) {
            break;
        }
        for (const auto& x : VectorSample{n.rows(), i, 100, 5000, false}.vectors()) {
            const CyclicImageReport r = cyclic_image_check(n, *t, x);
            o.require(r.passed(), [&] { return "type " + type.to_string() + ", T = " + t->to_string() + ", x = " + to_string(x) +
                                      ": cyclic image identity fails"; });
            ++checks;
        }
    }
    o.detail = o.ok ? std::to_string(checks) + " (T, x) pairs" : o.detail;
    return o;
}

// 8. Direct sums over primary components.
Outcome suite_primary_splitting() {
    Outcome o;
    std::mt19937_64 rng(8);
    for (int ex = 0; ex < 50 && o.ok; ++ex) {
        const std::size_t s = static_cast<std::size_t>(draw_int(rng, 2, 3));
        std::size_t budget = 8;
        std::vector<Matrix> blocks;
        std::vector<OperatorSpace> comms;
        std::vector<OperatorSpace> algs;
        const std::vector<Scalar> spectrum = distinct_eigenvalues(rng, s);
        for (std::size_t c = 0; c < s; ++c) {
            const std::size_t reserve = s - c - 1;
            const auto dim = static_cast<std::size_t>(
                draw_int(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(4, budget - reserve))));
            budget -= dim;
            const Matrix nc = disguised_nilpotent(rng, random_type(rng, dim));
            blocks.push_back(shifted(nc, spectrum[c]));
            comms.push_back(commutant(nc));
            algs.push_back(alg_lat_commutant(nc));
        }
        const Matrix a = Matrix::block_diagonal(blocks);
        const std::string tag = "A = " + a.to_string();
        o.require(commutant(a) == direct_sum(comms), tag + ": commutant is not the blockwise sum");
        o.require(alg_lat_primary(a, spectrum) == direct_sum(algs), tag + ": alg-lat is not the blockwise sum");
    }
    o.detail = o.ok ? "50 block-diagonal matrices" : o.detail;
    return o;
}

// 9. Swapping similar primary components.
Outcome suite_permutations() {
    Outcome o;
    std::mt19937_64 rng(9);
    for (int ex = 0; ex < 20 && o.ok; ++ex) {
        const std::size_t s = 2 + static_cast<std::size_t>(ex % 2);
        const std::vector<Scalar> spectrum = distinct_eigenvalues(rng, s);
        const JordanType shared = random_type(rng, static_cast<std::size_t>(draw_int(rng, 1, 3)));
        const std::size_t j = s == 2 ? 0 : static_cast<std::size_t>(draw_int(rng, 0, 1));
        const std::size_t k = s == 2 ? 1 : 2;
        std::vector<Matrix> blocks;
        for (std::size_t c = 0; c < s; ++c) {
            const JordanType type =
                (c == j || c == k) ? shared : random_type(rng, static_cast<std::size_t>(draw_int(rng, 1, 2)));
            blocks.push_back(shifted(disguised_nilpotent(rng, type), spectrum[c]));
        }
        const Matrix a0 = Matrix::block_diagonal(blocks);
        const Matrix q = random_invertible_matrix(rng, a0.rows());
        const Matrix a = q * a0 * *inverse(q);
        const std::string tag = "A = " + a.to_string();

        const ColChecker checker(a, spectrum);
        const PrimaryDecomposition& pd = checker.decomposition();
        const Matrix t = build_swap_collineation(pd, j, k);
        const ColVerdict v = checker.check(t);
        o.require(v.is_member(), [&] { return tag + ": swap is " + to_string(v.verdict); });
        std::vector<std::size_t> expected(s);
        for (std::size_t c = 0; c < s; ++c) {
            expected[c] = c == j ? k : c == k ? j : c;
        }
        o.require(extract_permutation(pd, t) == expected, tag + ": wrong permutation recovered");
    }
    o.detail = o.ok ? "20 swaps" : o.detail;
    return o;
}

// 10. Hankel back-substitution produces an intertwiner agreeing with T at x.
Outcome suite_hankel() {
    Outcome o;
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::vector<Vector> xs = VectorSample{n, 0, 0}.grid();
        for (std::size_t m = 1; m <= n; ++m) {
            const OperatorSpace target = jordan_intertwiner_closed_form(m, n);
            for (const auto& t : jordan_refl_closed_form(m, n).basis()) {
                for (const auto& x : xs) {
                    const Matrix s = hankel_witness(m, n, t, x);
                    ++checks;
                    if (!o.require(target.contains(s) && s.apply(x) == t.apply(x), [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " T=" + t.to_string() +
                                       " x=" + to_string(x); })) {
                        return o;
                    }
                }
            }
        }
    }
    o.detail = std::to_string(checks) + " (T, x) pairs";
    return o;
}

// 11. Invariant subspaces of a cyclic subspace form a chain.
Outcome suite_cycles() {
    Outcome o;
    std::size_t cycle_checks = 0;
    std::size_t joins = 0;
    std::uint64_t type_index = 0;
    for (const auto& type : types_up_to(6)) {
        ++type_index;
        const Matrix n = jordan_matrix(type);
        const std::size_t d = n.rows();
        std::vector<Vector> xs = VectorSample{d, 0, 0}.grid();
        xs.resize(std::min<std::size_t>(xs.size(), 24));
        for (auto& v : VectorSample{d, 1100 + type_index, 8, 5000, false}.vectors()) {
            xs.push_back(std::move(v));
        }
        std::mt19937_64 rng(11000 + type_index);
        for (const auto& x : xs) {
            const CyclicChain ch = cyclic_chain(n, x);
            const CycleReport r = cycle_check(n, x, VectorSample{0, type_index, 12, 5000, ch.krylov.size() <= 3});
            cycle_checks += r.checked;
            o.require(r.passed(), [&] { return "type " + type.to_string() + ", x = " + to_string(x) + ": cycle property fails"; });
            // Invariant M1, M2 inside (N)_x whose join is (N)_x: one of them is all of it.
            const Subspace& top = ch.top();
            for (int pair = 0; pair < 8 && o.ok; ++pair) {
                Subspace m[2];
                for (auto& mi : m) {
                    if (draw_int(rng, 0, 1) == 0) {
                        Vector y(d);
                        for (const auto& kv : ch.krylov) {
                            y = y + Scalar(draw_int(rng, -2, 2)) * kv;
                        }
                        mi = cyclic_subspace(n, y);
                    } else {
                        mi = intersect(top, cyclic_subspace(n, draw_vector(rng, d)));
                    }
                }
                if (sum(m[0], m[1]) == top) {
                    ++joins;
                    o.require(m[0] == top || m[1] == top, [&] { return "type " + type.to_string() + ", x = " + to_string(x) + ": join of proper members"; });
                }
            }
        }
    }
    o.detail = o.ok ? std::to_string(cycle_checks) + " cycle checks, " + std::to_string(joins) + " joins" : o.detail;
    return o;
}

const std::vector<std::function<Outcome()>>& suite_bodies() {
    static const std::vector<std::function<Outcome()>> bodies{
        suite_intertwiners, suite_alg_lat,     suite_commutant,         suite_dichotomy,
        suite_j2j2,         suite_commutant_members, suite_cyclic_images, suite_primary_splitting,
        suite_permutations, suite_hankel,      suite_cycles};
    return bodies;
}

}  // namespace

std::string SuiteResult::line() const {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, limit_seconds);
    std::string status = passed() ? "PASS" : "FAIL";
    std::string out = status + " " + std::to_string(id) + " " + name + " " + timing;
    if (correct && seconds > limit_seconds) {
        out += " over time limit";
    }
    return out + " " + detail;
}

const std::vector<SuiteInfo>& acceptance_suites() {
    static const std::vector<SuiteInfo> suites{
        {1, "intertwiner-closed-form", 5},    {2, "alg-lat-closed-form", 20},
        {3, "commutant-dimensions", 10},      {4, "block-dichotomy", 30},
        {5, "j2j2-collineations", 30},        {6, "commutant-members", 10},
        {7, "cyclic-images", 10},             {8, "primary-splitting", 10},
        {9, "component-swaps", 5},            {10, "hankel-witness", 10},
        {11, "cycle-property", 5},
    };
    return suites;
}

SuiteResult run_suite(const std::string& selector) {
    for (const auto& info : acceptance_suites()) {
        if (selector != std::to_string(info.id) && selector != info.name) {
            continue;
        }
        SuiteResult r{info.id, info.name, false, 0, info.limit_seconds, {}};
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = suite_bodies()[static_cast<std::size_t>(info.id - 1)]();
            r.correct = o.ok;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.correct = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    throw InputError("unknown suite '" + selector + "'");
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const auto& info : acceptance_suites()) {
        out.push_back(run_suite(std::to_string(info.id)));
    }
    return out;
}

Matrix random_element(const OperatorSpace& space, std::mt19937_64& rng, int bound, bool rational) {
    std::vector<Scalar> coeffs(space.dim());
    for (auto& c : coeffs) {
        c = rational ? draw_rational(rng) : Scalar(draw_int(rng, -bound, bound));
    }
    return space.combine(coeffs);
}

std::optional<Matrix> random_invertible_element(const OperatorSpace& space, std::mt19937_64& rng, int attempts,
                                                bool rational) {
    for (int k = 0; k < attempts; ++k) {
        Matrix t = random_element(space, rng, 3, rational);
        if (is_invertible(t)) {
            return t;
        }
    }
    return std::nullopt;
}

}  // namespace latcol
