#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tsvdkit/error.hpp"
#include "tsvdkit/tensor3.hpp"

using namespace tsvdkit;

namespace {

TEST(Tensor3, RejectsBadShapesAndNonFiniteEntries)
{
    EXPECT_THROW(Tensor3(0, 2, 2), DimensionError);
    EXPECT_THROW(Tensor3(2, 2, 2, std::vector<double>(7)), DimensionError);
    EXPECT_THROW(Tensor3(1, 1, 2, {1.0, NAN}), FormatError);
    EXPECT_THROW(Tensor3(1, 1, 1, {INFINITY}), FormatError);
}

TEST(Tensor3, LayoutIsFrontalSliceMajor)
{
    const Tensor3 a(2, 3, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    EXPECT_EQ(a(0, 0, 0), 0);
    EXPECT_EQ(a(1, 2, 0), 5);
    EXPECT_EQ(a(0, 1, 1), 7);
    EXPECT_EQ(a(1, 0, 1), 9);
    EXPECT_EQ(a.slice(1)(1, 2), 11);
}

TEST(FrobeniusNorm, Examples)
{
    EXPECT_EQ(frobenius_norm(Tensor3(2, 2, 2)), 0.0);
    EXPECT_EQ(frobenius_norm(oracle::single_entry(2, 3, 4, 1, 2, 3, 5.0)), 5.0);

    const Tensor3 a = random_tensor(4, 3, 5, 11);
    double sum = 0.0;
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                sum += a(i, j, k) * a(i, j, k);
    EXPECT_NEAR(frobenius_norm(a), std::sqrt(sum), 1e-14);
}

TEST(FrobeniusNorm, NoOverflowOnHugeEntries)
{
    const Tensor3 a(1, 1, 2, {1e200, 1e200});
    EXPECT_NEAR(frobenius_norm(a) / 1e200, std::sqrt(2.0), 1e-14);
}

TEST(Bcirc, DegenerateTubeIsTheSlice)
{
    const Tensor3 a = random_tensor(3, 2, 1, 3);
    EXPECT_EQ(bcirc(a).matrix(), a.slice(0));
}

TEST(Bcirc, TubeGivesCirculant)
{
    const Tensor3 a(1, 1, 3, {1, 2, 3});
    const RealMatrix expected(3, 3, {1, 3, 2, 2, 1, 3, 3, 2, 1});
    EXPECT_EQ(bcirc(a).matrix(), expected);
}

TEST(Bcirc, IdentityTensorMapsToIdentityMatrix)
{
    for (std::size_t n : {1, 2, 3})
        for (std::size_t p : {1, 2, 5})
            EXPECT_EQ(bcirc(identity_tensor(n, p)).matrix(), RealMatrix::identity(n * p));
}

TEST(Bcirc, BlockStructure)
{
    const Tensor3 a = random_tensor(2, 3, 4, 5);
    const RealMatrix b = bcirc(a).matrix();
    ASSERT_EQ(b.rows(), 8u);
    ASSERT_EQ(b.cols(), 12u);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    EXPECT_EQ(b(r * 2 + i, c * 3 + j), a(i, j, (r + 4 - c) % 4));
}

TEST(BcircInverse, RoundTripAndIdentity)
{
    const Tensor3 a = random_tensor(3, 4, 5, 8);
    EXPECT_EQ(bcirc_inverse(bcirc(a).matrix(), 3, 4, 5), a);
    EXPECT_EQ(bcirc_inverse(RealMatrix::identity(6), 2, 2, 3), identity_tensor(2, 3));
}

TEST(BcircInverse, RejectsPerturbedCirculant)
{
    const Tensor3 a = random_tensor(2, 2, 3, 9);
    RealMatrix b = bcirc(a).matrix();
    b(5, 1) += 1e-3;
    EXPECT_THROW(bcirc_inverse(b, 2, 2, 3, 1e-9), StructureError);
    // inside a looser tolerance the same matrix is accepted
    EXPECT_NO_THROW(bcirc_inverse(b, 2, 2, 3, 1e-2));
    EXPECT_THROW(bcirc_inverse(b, 3, 2, 3), DimensionError);
}

TEST(Unfold, StacksSlices)
{
    const Tensor3 a(2, 2, 2, {1, 2, 3, 4, 5, 6, 7, 8});
    const RealMatrix u = unfold(a);
    EXPECT_EQ(u, RealMatrix(4, 2, {1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(unfold(random_tensor(3, 2, 1, 4)), random_tensor(3, 2, 1, 4).slice(0));
    EXPECT_EQ(fold(u, 2), a);
    EXPECT_THROW(fold(u, 3), DimensionError);
}

TEST(Transpose, DegenerateTubeIsMatrixTranspose)
{
    const Tensor3 a = random_tensor(3, 4, 1, 2);
    EXPECT_EQ(transpose(a).slice(0), transpose(a.slice(0)));
}

TEST(Transpose, MatchesBcircTransposeAndIsInvolution)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Tensor3 a = random_tensor(3, 4, 5, seed);
        const Tensor3 t = transpose(a);
        EXPECT_EQ(t.m(), 4u);
        EXPECT_EQ(t.n(), 3u);
        EXPECT_EQ(bcirc(t).matrix(), transpose(bcirc(a).matrix()));
        EXPECT_EQ(transpose(t), a);
    }
}

TEST(IdentityTensor, Structure)
{
    EXPECT_EQ(identity_tensor(2, 1), Tensor3(2, 2, 1, {1, 0, 0, 1}));
    const Tensor3 id = identity_tensor(3, 4);
    int nonzero = 0;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (id(i, j, k) != 0.0) {
                    ++nonzero;
                    EXPECT_EQ(k, 0u);
                    EXPECT_EQ(i, j);
                    EXPECT_EQ(id(i, j, k), 1.0);
                }
    EXPECT_EQ(nonzero, 3);
}

TEST(Invariants, NormThroughBcirc)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 gen(seed);
        const std::size_t m = 1 + gen() % 5, n = 1 + gen() % 5, p = 1 + gen() % 6;
        const Tensor3 a = random_tensor(m, n, p, seed);
        const RealMatrix b = bcirc(a).matrix();
        double sum = 0.0;
        for (double x : b.data())
            sum += x * x;
        EXPECT_NEAR(frobenius_norm(a), std::sqrt(sum) / std::sqrt(static_cast<double>(p)), 1e-13);
        EXPECT_EQ(fold(unfold(a), p), a);
        EXPECT_EQ(bcirc_inverse(b, m, n, p), a);
    }
}

TEST(FDiagonal, Predicate)
{
    EXPECT_TRUE(is_f_diagonal(identity_tensor(3, 2)));
    EXPECT_TRUE(is_f_diagonal(oracle::fdiagonal_example()));
    EXPECT_FALSE(is_f_diagonal(oracle::single_entry(2, 2, 2, 0, 1, 1, 1e-3)));
    EXPECT_TRUE(is_f_diagonal(oracle::single_entry(2, 2, 2, 0, 1, 1, 1e-3), 1e-2));
}

} // namespace
