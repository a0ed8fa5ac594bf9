#include <gtest/gtest.h>

#include <limits>

#include "latcol/elimination.hpp"
#include "latcol/gaussian.hpp"
#include "latcol/matrix.hpp"
#include "latcol/rational.hpp"
#include "latcol/sample.hpp"

using namespace latcol;

TEST(Rational, NormalizesSignAndGcd) {
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParsesGrammar) {
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
    EXPECT_THROW((void)Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW((void)Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW((void)Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW((void)Rational::parse(""), std::invalid_argument);
}

TEST(Rational, OverflowPromotesAndDemotes) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq / big, big);
    EXPECT_TRUE((sq / big).is_small());
    EXPECT_EQ(sq - sq, Rational(0));
    const Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    EXPECT_EQ((tiny * tiny).inverse(), sq);
}

TEST(Rational, FieldIdentitiesOnSamples) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 500; ++k) {
        const Scalar a = draw_rational(rng), b = draw_rational(rng), c = draw_rational(rng);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        EXPECT_EQ(a - a, Scalar(0));
    }
}

TEST(Gaussian, ParsesAllForms) {
    EXPECT_EQ(Scalar::parse("1/2+3/4i"), Scalar(Rational(1, 2), Rational(3, 4)));
    EXPECT_EQ(Scalar::parse("2-i"), Scalar(Rational(2), Rational(-1)));
    EXPECT_EQ(Scalar::parse("-i"), Scalar(Rational(0), Rational(-1)));
    EXPECT_EQ(Scalar::parse("5i"), Scalar(Rational(0), Rational(5)));
    EXPECT_EQ(Scalar::parse("-3"), Scalar(-3));
    EXPECT_THROW((void)Scalar::parse("1+"), std::invalid_argument);
    EXPECT_THROW((void)Scalar::parse("i2"), std::invalid_argument);
}

TEST(Gaussian, RoundTripsThroughText) {
    for (const char* s : {"0", "-7/3", "i", "-i", "1+i", "2/3-5/7i", "-4i"}) {
        EXPECT_EQ(Scalar::parse(s).to_string(), s);
    }
}

TEST(Gaussian, InverseAndConjugate) {
    const Scalar z(Rational(3), Rational(4));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
    EXPECT_EQ(z * z.conj(), Scalar(25));
    EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
    EXPECT_THROW((void)Scalar(0).inverse(), std::domain_error);
}

TEST(Matrix, ProductsAndPowers) {
    const Matrix j = Matrix::jordan_block(3);
    EXPECT_EQ(j.pow(3), Matrix::zero(3, 3));
    EXPECT_FALSE(j.pow(2).is_zero());
    EXPECT_EQ(j.apply({1, 2, 3}), (Vector{2, 3, 0}));
    const Matrix a{{1, 2}, {3, 4}};
    EXPECT_EQ(a * Matrix::identity(2), a);
    EXPECT_EQ(a.transpose(), (Matrix{{1, 3}, {2, 4}}));
    EXPECT_EQ(a.block(1, 0, 1, 2), (Matrix{{3, 4}}));
}

TEST(Elimination, RrefIsCanonical) {
    const Matrix m{{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
    const RrefResult r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.reduced, (Matrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(Elimination, NullspaceAndSolve) {
    const Matrix m{{1, 1, 1}, {0, 1, 2}};
    const Matrix k = nullspace_basis(m);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((m * k).is_zero());
    auto sol = solve_linear(m, {3, 3});
    ASSERT_TRUE(sol);
    EXPECT_EQ(m.apply(sol->particular), (Vector{3, 3}));
    EXPECT_FALSE(solve_linear(Matrix{{1, 1}, {1, 1}}, {0, 1}));
}

TEST(Elimination, InverseOverGaussianRationals) {
    const Scalar i = Scalar::i();
    const Matrix m{{1, i}, {i, 2}};
    auto inv = inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Sample, GridOrderAndDeterminism) {
    const auto g = VectorSample{2, 0, 0}.grid();
    ASSERT_EQ(g.size(), 15u);
    EXPECT_EQ(g[0], (Vector{1, 0}));
    EXPECT_EQ(g[1], (Vector{-1, 0}));
    EXPECT_EQ(g[2], (Vector{2, 0}));
    EXPECT_EQ((VectorSample{7, 0, 0}.grid().size()), 5000u);
    EXPECT_EQ((VectorSample{3, 9, 20}.random()), (VectorSample{3, 9, 20}.random()));
    EXPECT_NE((VectorSample{3, 9, 20}.random()), (VectorSample{3, 10, 20}.random()));
    for (const auto& v : VectorSample{1, 4, 50, 5000, false}.vectors()) {
        EXPECT_FALSE(is_zero(v));
    }
}

TEST(Sample, ProjectiveNormalize) {
    EXPECT_EQ(projective_normalize({0, 2, 4}), projective_normalize({0, -1, -2}));
    EXPECT_EQ(projective_normalize({0, 2, 4}), (Vector{0, 1, 2}));
}
