#include <gtest/gtest.h>

#include <random>

#include "permtt/prime_field.hpp"

using namespace permtt;

namespace
{
// Multiplication by t on k[t]/(t^n) in the basis 1, t, ..., t^{n-1}.
FpMatrix shift_matrix(FieldSpec f, std::size_t n)
{
    FpMatrix m(f, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m(i + 1, i) = 1;
    return m;
}

FpMatrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 1.0)
{
    std::uniform_int_distribution<std::uint32_t> value(0, f.p() - 1);
    std::bernoulli_distribution keep(density);
    FpMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = keep(rng) ? value(rng) : 0;
    return m;
}

// Rank by brute force over GF(2): the number of distinct vectors in the
// column span is 2^rank.
std::size_t brute_rank_gf2(const FpMatrix& a)
{
    std::size_t count = 0;
    std::vector<std::vector<std::uint32_t>> seen;
    for (std::uint64_t mask = 0; mask < (1ull << a.cols()); ++mask)
    {
        std::vector<std::uint32_t> v(a.rows(), 0);
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (mask >> j & 1)
                for (std::size_t i = 0; i < a.rows(); ++i)
                    v[i] ^= a(i, j);
        if (std::find(seen.begin(), seen.end(), v) == seen.end())
            seen.push_back(v);
    }
    while ((1ull << count) < seen.size())
        ++count;
    return count;
}
} // namespace

TEST(FieldSpec, RejectsNonPrimesAndLargePrimes)
{
    EXPECT_THROW(FieldSpec(1), std::invalid_argument);
    EXPECT_THROW(FieldSpec(4), std::invalid_argument);
    EXPECT_THROW(FieldSpec(65537), std::invalid_argument);
    EXPECT_NO_THROW(FieldSpec(65521));
}

TEST(FieldSpec, ArithmeticAndInverses)
{
    FieldSpec f(7);
    EXPECT_EQ(f.reduce(-1), 6u);
    EXPECT_EQ(f.add(5, 4), 2u);
    EXPECT_EQ(f.sub(2, 5), 4u);
    EXPECT_EQ(f.neg(3), 4u);
    for (std::uint32_t a = 1; a < 7; ++a)
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_THROW(f.inv(0), std::domain_error);
    FieldSpec big(65521);
    EXPECT_EQ(big.mul(65520, 65520), 1u);
}

TEST(MatMul, Examples)
{
    FieldSpec f2(2), f3(3);
    auto i3 = FpMatrix::identity(f2, 3);
    EXPECT_EQ(i3 * i3, i3);

    auto t = shift_matrix(f3, 3);
    auto t2 = t * t;
    FpMatrix expected(f3, 3, 3);
    expected(2, 0) = 1;
    EXPECT_EQ(t2, expected);
    EXPECT_EQ(rank(t2), 1u);

    auto row = FpMatrix::from_rows(f2, {{1, 1}});
    EXPECT_EQ(row * row.transpose(), FpMatrix(f2, 1, 1));
}

TEST(MatMul, Errors)
{
    FieldSpec f2(2), f3(3);
    EXPECT_THROW(FpMatrix(f2, 2, 3) * FpMatrix(f2, 2, 3), DimensionError);
    EXPECT_THROW(FpMatrix(f2, 2, 2) * FpMatrix(f3, 2, 2), FieldMismatch);
    EXPECT_THROW(FpMatrix(f3, 1, 2, {1, 3}), std::invalid_argument);
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(FpMatrix::identity(FieldSpec(2), 3)), 3u);
    EXPECT_EQ(rank(shift_matrix(FieldSpec(3), 3)), 2u);
    EXPECT_EQ(rank(FpMatrix(FieldSpec(5), 2, 5)), 0u);
}

TEST(KernelBasis, Examples)
{
    FieldSpec f2(2);
    auto aug = FpMatrix::from_rows(f2, {{1, 1}});
    auto k = kernel_basis(aug);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (FpVector{1, 1}));

    EXPECT_TRUE(kernel_basis(FpMatrix::identity(f2, 3)).empty());

    FieldSpec f5(5);
    auto k5 = kernel_basis(shift_matrix(f5, 5));
    ASSERT_EQ(k5.size(), 1u);
    EXPECT_EQ(k5[0], (FpVector{0, 0, 0, 0, 1}));
}

TEST(SolveSpace, Examples)
{
    FieldSpec f2(2);
    auto i2 = FpMatrix::identity(f2, 2);
    auto s = solve_space(i2, i2);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, i2);
    EXPECT_TRUE(s->kernel.empty());

    auto a = FpMatrix::from_rows(f2, {{1, 1}});
    auto b = FpMatrix::from_rows(f2, {{1}});
    auto t = solve_space(a, b);
    ASSERT_TRUE(t);
    EXPECT_EQ(a * t->particular, b);
    EXPECT_EQ(t->kernel.size(), 1u);
    // all solutions by enumeration: {(1,0), (0,1)}
    int count = 0;
    for (std::uint32_t x = 0; x < 2; ++x)
        for (std::uint32_t y = 0; y < 2; ++y)
            count += ((x + y) % 2 == 1);
    EXPECT_EQ(count, 1 << t->kernel.size());

    EXPECT_FALSE(solve_space(FpMatrix(f2, 2, 2), i2));
    EXPECT_THROW(solve_space(i2, FpMatrix(f2, 3, 1)), DimensionError);
}

TEST(Properties, RankNullityOnRandomMatrices)
{
    std::mt19937_64 rng(7);
    for (unsigned p : {2u, 3u, 5u})
    {
        FieldSpec f(p);
        std::uniform_int_distribution<std::size_t> dim(1, 40);
        for (int trial = 0; trial < 60; ++trial)
        {
            auto a = random_matrix(f, dim(rng), dim(rng), rng, trial % 3 == 0 ? 0.15 : 1.0);
            auto k = kernel_basis(a);
            EXPECT_EQ(rank(a) + k.size(), a.cols());
            for (const auto& v : k)
                for (auto x : permtt::apply(a, v))
                    EXPECT_EQ(x, 0u);
        }
    }
}

TEST(Properties, RankAgreesWithSpanEnumerationOverGF2)
{
    std::mt19937_64 rng(11);
    FieldSpec f(2);
    for (int trial = 0; trial < 40; ++trial)
    {
        auto a = random_matrix(f, 1 + trial % 6, 1 + trial % 7, rng, 0.5);
        EXPECT_EQ(rank(a), brute_rank_gf2(a));
    }
}

TEST(Properties, AssociativityAndIdentity)
{
    std::mt19937_64 rng(3);
    for (unsigned p : {2u, 3u, 5u})
    {
        FieldSpec f(p);
        for (int trial = 0; trial < 20; ++trial)
        {
            auto a = random_matrix(f, 4, 6, rng), b = random_matrix(f, 6, 3, rng), c = random_matrix(f, 3, 5, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(FpMatrix::identity(f, 4) * a, a);
            EXPECT_EQ(a * FpMatrix::identity(f, 6), a);
        }
    }
}

TEST(Properties, SolveSpaceSolutionsSolve)
{
    std::mt19937_64 rng(5);
    FieldSpec f(3);
    for (int trial = 0; trial < 30; ++trial)
    {
        auto a = random_matrix(f, 5, 7, rng, 0.4);
        auto x = random_matrix(f, 7, 2, rng);
        auto b = a * x;
        auto s = solve_space(a, b);
        ASSERT_TRUE(s);
        EXPECT_EQ(a * s->particular, b);
        EXPECT_EQ(s->kernel.size(), 7 - rank(a));
    }
}

TEST(Kronecker, MixedProductRule)
{
    std::mt19937_64 rng(9);
    FieldSpec f(5);
    auto a = random_matrix(f, 2, 3, rng), b = random_matrix(f, 3, 2, rng);
    auto c = random_matrix(f, 3, 2, rng), d = random_matrix(f, 2, 4, rng);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
}
