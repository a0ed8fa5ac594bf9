#include <gtest/gtest.h>

#include "latcol/collineation.hpp"
#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"
#include "latcol/verify.hpp"

using namespace latcol;

namespace {

Matrix j22() { return jordan_matrix(JordanType{{2, 2}}); }
Matrix diag(std::vector<Scalar> d) { return Matrix::diagonal(d); }
const std::vector<Scalar> kZero{Scalar(0)};

}  // namespace

TEST(ColCheck, SingleChainInvertibleAlgLatElementIsMember) {
    const ColVerdict v = col_check(Matrix::jordan_block(2), Matrix{{1, 1}, {0, 2}}, kZero);
    EXPECT_EQ(v.verdict, Verdict::MemberExact);
    EXPECT_FALSE(v.witness);
}

TEST(ColCheck, DiagonalSeparatorIsRefutedWithWitness) {
    const Matrix t = diag({1, 1, 1, 2});
    const ColVerdict v = col_check(j22(), t, kZero);
    ASSERT_EQ(v.verdict, Verdict::NonMember);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_witness(j22(), t, *v.witness));
    EXPECT_EQ(v.witness->subspace, Subspace::span_of(4, std::vector<Vector>{{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(ColCheck, NotInvertible) {
    EXPECT_EQ(col_check(j22(), diag({1, 1, 1, 0}), kZero).verdict, Verdict::NotInvertible);
}

TEST(ColCheck, SwapOfEigenspacesIsMember) {
    const ColVerdict v = col_check(diag({0, 1}), Matrix{{0, 1}, {1, 0}}, {Scalar(0), Scalar(1)});
    EXPECT_EQ(v.verdict, Verdict::MemberExact);
    EXPECT_EQ(v.permutation, (std::vector<std::size_t>{1, 0}));
}

TEST(ColCheck, MixingDissimilarComponentsIsRefuted) {
    const Matrix a = Matrix::block_diagonal(std::vector<Matrix>{Matrix::jordan_block(2), Matrix{{1}}});
    const Matrix t{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    const ColVerdict v = col_check(a, t, {Scalar(0), Scalar(1)});
    EXPECT_EQ(v.verdict, Verdict::NonMember);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_witness(a, t, *v.witness));
}

TEST(ColCheck, CommutantElementInDisguisedCoordinates) {
    const Matrix p{{1, 1, 0, 0}, {0, 1, 2, 0}, {1, 0, 1, 1}, {0, 0, 1, 1}};
    const Matrix pinv = *inverse(p);
    const Matrix n = p * j22() * pinv;
    const Matrix c{{2, 1, 0, 3}, {0, 2, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 1}};
    ASSERT_EQ(c * j22(), j22() * c);
    EXPECT_EQ(col_check(n, p * c * pinv, kZero).verdict, Verdict::MemberExact);
    const Matrix d = p * diag({1, 1, 1, 2}) * pinv;
    const ColVerdict v = col_check(n, d, kZero);
    ASSERT_EQ(v.verdict, Verdict::NonMember);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_witness(n, d, *v.witness));
}

TEST(ColCheck, ThreeTwoTypeUsesSampler) {
    const Matrix n = jordan_matrix(JordanType{{3, 2}});
    std::vector<Scalar> dd(5, Scalar(1));
    dd[4] = Scalar(2);
    const ColVerdict v = col_check(n, diag(dd), kZero);
    EXPECT_EQ(v.verdict, Verdict::NonMember);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(verify_witness(n, diag(dd), *v.witness));
    const ColVerdict s = col_check(n, Matrix::identity(5) + Scalar(3) * Matrix::unit(5, 5, 0, 4), kZero);
    EXPECT_TRUE(s.is_member());
}

TEST(ColCheck, RejectsWrongShape) {
    EXPECT_THROW((void)col_check(j22(), Matrix::identity(3), kZero), InputError);
}

TEST(Sampled, FindsCounterexampleForSeparator) {
    const SampledResult r = col_check_sampled(j22(), diag({1, 1, 1, 2}), VectorSample{4, 0, 100});
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_witness(j22(), diag({1, 1, 1, 2}), *r.witness));
}

TEST(Sampled, PassesForCollineation) {
    EXPECT_TRUE(col_check_sampled(j22(), diag({1, 2, 1, 2}), VectorSample{4, 0, 100}).passed);
}

TEST(J2J2, ClosedFormRoundTrip) {
    ColParamJ2J2 p;
    p.t = Scalar(2);
    p.gamma = {1, 2, 3, 4, 5, 6, 7, 8};
    ASSERT_TRUE(p.nondegenerate());
    auto back = col_j2j2_decide(p.realize());
    ASSERT_TRUE(back);
    EXPECT_EQ(back->realize(), p.realize());
    EXPECT_FALSE(col_j2j2_decide(diag({1, 1, 1, 2})));
}

TEST(J2J2, LatticeSampleIsInvariantAndOrdered) {
    const auto elems = lat_j2j2_sample();
    EXPECT_EQ(elems.size(), 651u);
    EXPECT_EQ(elems[0].kind, LatticeKind::Trivial0);
    for (const auto& e : elems) {
        EXPECT_TRUE(is_invariant(j22(), e.realized));
    }
}

TEST(Separator, CertificatesForTwoNontrivialBlocks) {
    for (const auto& t : {JordanType{{2, 2}}, JordanType{{3, 2}}, JordanType{{3, 3, 1}}}) {
        EXPECT_TRUE(diagonal_separator(jordan_matrix(t)).verified()) << t.to_string();
    }
    EXPECT_THROW((void)diagonal_separator(jordan_matrix(JordanType{{3, 1}})), PreconditionError);
}

TEST(Witness, CommutantWitnessForJ2) {
    auto b = commutant_witness(Matrix::jordan_block(2), Matrix{{1, 1}, {0, 2}}, {0, 1});
    ASSERT_TRUE(b);
    EXPECT_EQ(*b * Matrix::jordan_block(2), Matrix::jordan_block(2) * *b);
    EXPECT_EQ(b->apply({0, 1}), (Vector{1, 2}));
}

TEST(Witness, NoWitnessForSeparator) {
    EXPECT_FALSE(commutant_witness(j22(), diag({1, 1, 1, 2}), {0, 1, 0, 1}));
    const CyclicImageReport r = cyclic_image_check(j22(), diag({1, 1, 1, 2}), {0, 1, 0, 1});
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.top_annihilated);
}

TEST(Permutation, SwapCollineationOnSimilarComponents) {
    const Matrix a = Matrix::block_diagonal(
        std::vector<Matrix>{Matrix::jordan_block(2), Matrix::identity(2) + Matrix::jordan_block(2)});
    const std::vector<Scalar> spectrum{Scalar(0), Scalar(1)};
    const PrimaryDecomposition pd = primary_decompose(a, spectrum);
    const Matrix t = build_swap_collineation(pd, 0, 1);
    EXPECT_EQ(extract_permutation(pd, t), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(col_check(a, t, spectrum).verdict, Verdict::MemberExact);
    EXPECT_THROW((void)build_swap_collineation(pd, 0, 2), InputError);
}

TEST(Permutation, DissimilarComponentsCannotBeSwapped) {
    const Matrix a = Matrix::block_diagonal(std::vector<Matrix>{Matrix::jordan_block(2), Matrix::identity(2)});
    const PrimaryDecomposition pd = primary_decompose(a, {Scalar(0), Scalar(1)});
    EXPECT_THROW((void)build_swap_collineation(pd, 0, 1), PreconditionError);
    EXPECT_THROW((void)extract_permutation(pd, Matrix{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                 PreconditionError);
}

TEST(Properties, RandomAlgLatElementsOfSingleChainTypesAreMembers) {
    std::mt19937_64 rng(21);
    for (const auto& t : {JordanType{{3, 1, 1}}, JordanType{{4}}, JordanType{{2, 1}}}) {
        const Matrix n = jordan_matrix(t);
        const OperatorSpace al = alg_lat_commutant(n);
        const ColChecker checker(n, kZero);
        for (int k = 0; k < 20; ++k) {
            auto m = random_invertible_element(al, rng);
            ASSERT_TRUE(m);
            EXPECT_EQ(checker.check(*m).verdict, Verdict::MemberExact);
        }
    }
}

TEST(Properties, RefutationsAlwaysCarryVerifiedWitnesses) {
    std::mt19937_64 rng(22);
    for (const auto& t : {JordanType{{2, 2}}, JordanType{{3, 2}}, JordanType{{2, 2, 1}}}) {
        const Matrix n = jordan_matrix(t);
        const OperatorSpace al = alg_lat_commutant(n);
        const ColChecker checker(n, kZero, VectorSample{0, 0, 20});
        for (int k = 0; k < 15; ++k) {
            auto m = random_invertible_element(al, rng);
            ASSERT_TRUE(m);
            const ColVerdict v = checker.check(*m);
            if (v.verdict == Verdict::NonMember) {
                ASSERT_TRUE(v.witness) << t.to_string() << " " << m->to_string();
                EXPECT_TRUE(verify_witness(n, *m, *v.witness));
            }
        }
    }
}
