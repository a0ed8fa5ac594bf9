#include <gtest/gtest.h>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"
#include "latcol/opspaces.hpp"
#include "latcol/structure.hpp"

using namespace latcol;

namespace {

Matrix j22() { return jordan_matrix(JordanType{{2, 2}}); }

}  // namespace

TEST(OperatorSpace, SpanMembershipAndCoordinates) {
    const std::vector<Matrix> gens{Matrix::identity(2), Matrix::jordan_block(2)};
    const OperatorSpace s = OperatorSpace::span_of(2, 2, gens);
    EXPECT_EQ(s.dim(), 2u);
    const Matrix m{{3, 5}, {0, 3}};
    EXPECT_TRUE(s.contains(m));
    EXPECT_FALSE(s.contains(Matrix{{1, 0}, {0, 2}}));
    EXPECT_EQ(s.combine(s.coordinates(m)), m);
}

TEST(OperatorSpace, CommutantOfJ2PlusJ2HasDimensionEight) {
    const OperatorSpace c = commutant(j22());
    EXPECT_EQ(c.dim(), 8u);
    for (const auto& b : c.basis()) {
        EXPECT_EQ(j22() * b, b * j22());
    }
}

TEST(OperatorSpace, CommutantOfDiagonalMatrix) {
    const Matrix d = Matrix::diagonal(std::vector<Scalar>{1, 1, 2});
    EXPECT_EQ(commutant(d).dim(), 5u);
}

TEST(OperatorSpace, IntertwinersOfJ2AndJ3) {
    const OperatorSpace s = intertwiners(Matrix::jordan_block(2), Matrix::jordan_block(3));
    EXPECT_EQ(s, jordan_intertwiner_closed_form(2, 3));
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(Matrix{{0, 1, 0}, {0, 0, 1}}));
    EXPECT_TRUE(s.contains(Matrix{{0, 0, 1}, {0, 0, 0}}));
}

TEST(OperatorSpace, IntertwinersTallCase) {
    EXPECT_EQ(intertwiners(Matrix::jordan_block(4), Matrix::jordan_block(2)), jordan_intertwiner_closed_form(4, 2));
}

TEST(OperatorSpace, AlgLatOfJ2PlusJ2) {
    const OperatorSpace a = alg_lat_commutant(j22());
    EXPECT_EQ(a.dim(), 12u);
    EXPECT_EQ(a, refl_blockwise(JordanType{{2, 2}}));
    EXPECT_FALSE(a.contains(Matrix::unit(4, 4, 1, 0)));
    EXPECT_TRUE(a.contains(Matrix::unit(4, 4, 1, 3)));
}

TEST(OperatorSpace, AlgLatOf32HasDimensionFifteen) {
    const JordanType t{{3, 2}};
    const OperatorSpace a = alg_lat_commutant(jordan_matrix(t));
    EXPECT_EQ(a.dim(), 15u);
    EXPECT_EQ(a, refl_blockwise(t));
    EXPECT_EQ(commutant(jordan_matrix(t)).dim(), 9u);
}

TEST(OperatorSpace, AlgLatIsBasisIndependent) {
    const Matrix p{{1, 2, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 1, 1}};
    const Matrix pinv = *inverse(p);
    const Matrix n = p * j22() * pinv;
    const OperatorSpace a = alg_lat_commutant(n);
    EXPECT_EQ(a.dim(), 12u);
    for (const auto& b : alg_lat_commutant(j22()).basis()) {
        EXPECT_TRUE(a.contains(p * b * pinv));
    }
}

TEST(OperatorSpace, AlgLatPrimaryOfBlockDiagonal) {
    const Matrix a = Matrix::block_diagonal(std::vector<Matrix>{Matrix::jordan_block(2),
                                                                Matrix{{5, 1}, {0, 5}}});
    const OperatorSpace got = alg_lat_primary(a, {Scalar(0), Scalar(5)});
    const std::vector<OperatorSpace> parts{alg_lat_commutant(Matrix::jordan_block(2)),
                                           alg_lat_commutant(Matrix::jordan_block(2))};
    EXPECT_EQ(got, direct_sum(parts));
    EXPECT_EQ(got.dim(), 6u);
}

TEST(OperatorSpace, AlgLatRequiresNilpotent) {
    EXPECT_THROW((void)alg_lat_commutant(Matrix::identity(2)), PreconditionError);
}

TEST(OperatorSpace, SampledReflexiveCoverMatchesClosedForm) {
    const OperatorSpace s = refl_sampled_superset(commutant(j22()), VectorSample{4, 0, 20});
    EXPECT_EQ(s, refl_blockwise(JordanType{{2, 2}}));
}

TEST(Hankel, WorkedExamples) {
    const Matrix t{{0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(hankel_witness(2, 3, t, {0, 1, 0}), (Matrix{{0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(hankel_witness(2, 2, Matrix{{0, 1}, {0, 0}}, {0, 1}), (Matrix{{0, 1}, {0, 0}}));
    EXPECT_EQ(hankel_witness(2, 3, t, {1, 0, 0}), Matrix::zero(2, 3));
}

TEST(Hankel, TallBlocks) {
    const OperatorSpace target = jordan_intertwiner_closed_form(4, 2);
    for (const auto& t : jordan_refl_closed_form(4, 2).basis()) {
        for (const auto& x : VectorSample{2, 0, 10}.vectors()) {
            const Matrix s = hankel_witness(4, 2, t, x);
            EXPECT_TRUE(target.contains(s));
            EXPECT_EQ(s.apply(x), t.apply(x));
        }
    }
}

TEST(Hankel, RejectsMatricesOutsideTheClosedForm) {
    EXPECT_THROW((void)hankel_witness(2, 2, Matrix{{0, 0}, {1, 0}}, {1, 1}), InputError);
}

TEST(Hyperinvariant, ClosureOfJ2PlusJ2) {
    const HyperinvariantGenerators h = hyperinvariant_generators(j22());
    ASSERT_EQ(h.closure.size(), 3u);
    const Subspace ker = nullspace(j22());
    EXPECT_NE(std::find(h.closure.begin(), h.closure.end(), ker), h.closure.end());
    for (const auto& m : h.closure) {
        EXPECT_TRUE(is_hyperinvariant(j22(), m));
    }
    EXPECT_FALSE(is_hyperinvariant(j22(), Subspace::span_of(4, std::vector<Vector>{{1, 0, 0, 0}})));
}
