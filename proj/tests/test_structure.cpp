#include <gtest/gtest.h>

#include "latcol/elimination.hpp"
#include "latcol/errors.hpp"
#include "latcol/structure.hpp"
#include "latcol/subspace.hpp"

using namespace latcol;

namespace {

Subspace span(std::size_t n, std::vector<Vector> vs) { return Subspace::span_of(n, vs); }

Matrix conjugate(const Matrix& m, const Matrix& p) { return p * m * *inverse(p); }

const Matrix kP{{1, 1, 0, 0}, {0, 1, 2, 0}, {1, 0, 1, 1}, {0, 0, 1, 1}};

}  // namespace

TEST(Subspace, CanonicalBasisMakesEqualityStructural) {
    EXPECT_EQ(span(3, {{1, 1, 0}, {0, 1, 1}}), span(3, {{1, 2, 1}, {1, 0, -1}}));
    EXPECT_NE(span(3, {{1, 0, 0}}), span(3, {{0, 1, 0}}));
    EXPECT_EQ(span(2, {{0, 0}}), Subspace(2));
}

TEST(Subspace, LatticeOperations) {
    const Subspace a = span(3, {{1, 0, 0}, {0, 1, 0}});
    const Subspace b = span(3, {{0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(intersect(a, b), span(3, {{0, 1, 0}}));
    EXPECT_TRUE(sum(a, b).is_whole());
    EXPECT_EQ(compare(a, b), Order::Incomparable);
    EXPECT_EQ(compare(span(3, {{0, 1, 0}}), a), Order::Less);
    EXPECT_TRUE(a.contains(Vector{3, -2, 0}));
    EXPECT_FALSE(a.contains(Vector{0, 0, 1}));
    EXPECT_TRUE(is_zero(a.residual({5, 7, 0})));
}

TEST(Subspace, KernelRangeImagePreimage) {
    const Matrix j = Matrix::jordan_block(3);
    EXPECT_EQ(nullspace(j), span(3, {{1, 0, 0}}));
    EXPECT_EQ(range(j), span(3, {{1, 0, 0}, {0, 1, 0}}));
    EXPECT_EQ(image(j, Subspace::whole(3)), range(j));
    EXPECT_EQ(preimage(j, span(3, {{1, 0, 0}})), span(3, {{1, 0, 0}, {0, 1, 0}}));
    EXPECT_TRUE(is_invariant(j, range(j)));
    EXPECT_FALSE(is_invariant(j, span(3, {{0, 1, 0}})));
}

TEST(Structure, PartitionsAreCountedAndOrdered) {
    EXPECT_EQ(jordan_types_of_dimension(4).size(), 5u);
    EXPECT_EQ(jordan_types_of_dimension(8).size(), 22u);
    EXPECT_EQ(jordan_types_of_dimension(4).front().blocks, (std::vector<std::size_t>{4}));
    EXPECT_EQ(jordan_types_of_dimension(4).back().blocks, (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Structure, JordanTypeAndBasisInDisguise) {
    const JordanType t{{2, 2}};
    const Matrix n = conjugate(jordan_matrix(t), kP);
    EXPECT_EQ(nil_index(n), 2u);
    EXPECT_EQ(jordan_type(n), t);
    const JordanBasis jb = jordan_basis(n);
    EXPECT_EQ(jb.basis_inverse * n * jb.basis, jordan_matrix(t));
    EXPECT_EQ(jb.basis * jb.basis_inverse, Matrix::identity(4));
}

TEST(Structure, JordanBasisOfJordanFormIsIdentity) {
    for (const auto& t : jordan_types_of_dimension(5)) {
        EXPECT_EQ(jordan_basis(jordan_matrix(t)).basis, Matrix::identity(5)) << t.to_string();
    }
}

TEST(Structure, NilIndexRejectsNonNilpotent) {
    EXPECT_THROW((void)nil_index(Matrix::identity(2)), PreconditionError);
    EXPECT_EQ(nil_index(Matrix::zero(3, 3)), 1u);
}

TEST(Structure, CyclicChainOfJ3) {
    const Matrix j = Matrix::jordan_block(3);
    const CyclicChain ch = cyclic_chain(j, {1, 1, 0});
    EXPECT_EQ(ch.height, 1u);
    ASSERT_EQ(ch.chain.size(), 2u);
    EXPECT_EQ(ch.chain[0], span(3, {{1, 0, 0}}));
    EXPECT_EQ(ch.top(), cyclic_subspace(j, {1, 1, 0}));
    EXPECT_TRUE(cycle_check(j, {0, 1, 1}, VectorSample{0, 0, 20}).passed());
}

TEST(Structure, CycleCheckCoversMultipleBlocks) {
    const Matrix n = jordan_matrix(JordanType{{3, 2, 1}});
    for (const auto& x : VectorSample{6, 3, 30, 5000, false}.vectors()) {
        EXPECT_TRUE(cycle_check(n, x, VectorSample{0, 1, 20}).passed());
    }
}

TEST(Structure, PrimaryDecompositionOfDiagonalizable) {
    const Matrix a{{2, 1}, {0, 3}};
    const PrimaryDecomposition pd = primary_decompose(a, {Scalar(2), Scalar(3)});
    ASSERT_EQ(pd.components.size(), 2u);
    EXPECT_EQ(pd.components[0].exponent, 1u);
    EXPECT_EQ(pd.components[1].space, span(2, {{1, 1}}));
    EXPECT_EQ(pd.change_of_basis_inverse * a * pd.change_of_basis, Matrix::diagonal(std::vector<Scalar>{2, 3}));
}

TEST(Structure, PrimaryDecompositionWithGaussianEigenvalues) {
    const Scalar i = Scalar::i();
    const Matrix a0 = Matrix::block_diagonal(std::vector<Matrix>{
        Matrix{{i, 1}, {0, i}}, Matrix{{-i}}, Matrix{{1 + i, 0}, {0, 1 + i}}});
    const Matrix p{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
    const Matrix a = conjugate(a0, p);
    const PrimaryDecomposition pd = primary_decompose(a, {i, -i, 1 + i});
    EXPECT_EQ(pd.components[0].type, (JordanType{{2}}));
    EXPECT_EQ(pd.components[0].exponent, 2u);
    EXPECT_EQ(pd.components[2].type, (JordanType{{1, 1}}));
    EXPECT_EQ(group_by_similarity(pd).size(), 3u);
}

TEST(Structure, PrimaryDecompositionRejectsBadSpectra) {
    const Matrix a{{2, 1}, {0, 3}};
    EXPECT_THROW((void)primary_decompose(a, {Scalar(2)}), InputError);
    EXPECT_THROW((void)primary_decompose(a, {Scalar(2), Scalar(2), Scalar(3)}), InputError);
    EXPECT_THROW((void)primary_decompose(a, {Scalar(2), Scalar(3), Scalar(5)}), InputError);
}

TEST(Structure, SimilarityOfNilpotents) {
    const Matrix n1 = conjugate(jordan_matrix(JordanType{{2, 2}}), kP);
    const Matrix n2 = jordan_matrix(JordanType{{2, 2}});
    auto s = nilpotent_similarity(n1, n2);
    ASSERT_TRUE(s);
    EXPECT_EQ(*s * n1, n2 * *s);
    EXPECT_FALSE(nilpotent_similarity(n2, jordan_matrix(JordanType{{3, 1}})));
}
