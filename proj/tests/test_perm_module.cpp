#include <gtest/gtest.h>

#include <random>

#include "permtt/catalog.hpp"
#include "permtt/group_algebra.hpp"

using namespace permtt;

namespace
{
Subgroup subgroup_of_order(const FiniteGroup& g, std::size_t n)
{
    for (const auto& s : all_subgroups(g))
        if (s.order() == n)
            return s;
    throw std::logic_error("no subgroup of that order");
}

// Equivariant maps m -> n by solving A rho_m(s) = rho_n(s) A over all generators.
std::size_t hom_dim_by_linear_system(const PermModule& m, const PermModule& n)
{
    const auto& f = m.field();
    const auto rows = n.dimension(), cols = m.dimension();
    const auto& gens = m.group().generators();
    FpMatrix system(f, gens.size() * rows * cols, rows * cols);
    std::size_t eq = 0;
    for (int s : gens)
        for (std::size_t y = 0; y < rows; ++y)
            for (std::size_t x = 0; x < cols; ++x, ++eq)
            {
                // (A rho_m(s))[y][x] = A[y][s^{-1}x]... written as A[gy][gx] = A[y][x]
                auto gy = static_cast<std::size_t>(n.act(s, static_cast<int>(y)));
                auto gx = static_cast<std::size_t>(m.act(s, static_cast<int>(x)));
                system(eq, gy * cols + gx) = f.add(system(eq, gy * cols + gx), 1);
                system(eq, y * cols + x) = f.sub(system(eq, y * cols + x), 1);
            }
    return kernel_basis(system).size();
}

FpMatrix random_equivariant(const PermModule& m, const PermModule& n, std::mt19937_64& rng)
{
    FpMatrix a(m.field(), n.dimension(), m.dimension());
    std::uniform_int_distribution<std::uint32_t> c(0, m.field().p() - 1);
    for (const auto& b : hom_space(m, n))
        a = a + scale(b, c(rng));
    return a;
}
} // namespace

TEST(CosetModule, Examples)
{
    FieldSpec f(2);
    auto c4 = catalog("C4");
    EXPECT_EQ(coset_module(subgroup_of_order(c4, 2), f).dimension(), 2u);
    auto unit = coset_module(whole_group(c4), f);
    EXPECT_EQ(unit.dimension(), 1u);
    for (int g = 0; g < 4; ++g)
        EXPECT_EQ(unit.act(g, 0), 0);
    auto c2 = catalog("C2");
    auto reg = coset_module(trivial_subgroup(c2), f);
    EXPECT_EQ(reg.dimension(), 2u);
    EXPECT_EQ(reg.basis().orbits().size(), 1u);
}

TEST(Tensor, Examples)
{
    FieldSpec f(2);
    auto c2 = catalog("C2");
    auto reg = coset_module(trivial_subgroup(c2), f);
    auto rr = tensor(reg, reg);
    EXPECT_EQ(rr.dimension(), 4u);
    auto orbits = rr.basis().orbits();
    EXPECT_EQ(orbits.size(), 2u);
    for (const auto& o : orbits)
        EXPECT_EQ(o.stabilizer.order(), 1u);

    auto c4 = catalog("C4");
    auto half = coset_module(subgroup_of_order(c4, 2), f);
    auto hh = tensor(half, half);
    EXPECT_EQ(hh.dimension(), 4u);
    auto o2 = hh.basis().orbits();
    EXPECT_EQ(o2.size(), 2u);
    for (const auto& o : o2)
        EXPECT_EQ(o.stabilizer.order(), 2u);

    // unit law: k (x) M has the same action as M
    auto um = tensor(unit_module(c4, f), half);
    for (int g = 0; g < 4; ++g)
        for (int x = 0; x < 2; ++x)
            EXPECT_EQ(um.act(g, x), half.act(g, x));
}

TEST(Tensor, Associativity)
{
    FieldSpec f(3);
    auto s3 = catalog("S3");
    auto a = coset_module(subgroup_of_order(s3, 2), f), b = coset_module(subgroup_of_order(s3, 3), f);
    auto c = coset_module(trivial_subgroup(s3), f);
    auto left = tensor(tensor(a, b), c), right = tensor(a, tensor(b, c));
    ASSERT_EQ(left.dimension(), right.dimension());
    // both use the lexicographic index ((i*db)+j)*dc+k = i*(db*dc)+(j*dc+k)
    for (int g = 0; g < 6; ++g)
        for (int x = 0; x < static_cast<int>(left.dimension()); ++x)
            EXPECT_EQ(left.act(g, x), right.act(g, x));
}

TEST(FixedPoints, Examples)
{
    FieldSpec f(2);
    auto c4 = catalog("C4");
    auto reg = coset_module(trivial_subgroup(c4), f);
    EXPECT_EQ(fixed_points(reg, subgroup_of_order(c4, 2)).dimension, 2u);
    EXPECT_EQ(fixed_points(reg, trivial_subgroup(c4)).dimension, 4u);
    auto unit = unit_module(c4, f);
    EXPECT_EQ(fixed_points(unit, whole_group(c4)).dimension, 1u);
}

TEST(Brauer, Examples)
{
    FieldSpec f(2);
    auto c4 = catalog("C4");
    auto c2 = subgroup_of_order(c4, 2);
    EXPECT_EQ(brauer(coset_module(c2, f), c2).module.dimension(), 2u);
    EXPECT_EQ(brauer(coset_module(trivial_subgroup(c4), f), c2).module.dimension(), 0u);
    auto reg = coset_module(trivial_subgroup(c4), f);
    auto same = brauer(reg, trivial_subgroup(c4));
    EXPECT_EQ(same.module.dimension(), reg.dimension());
    EXPECT_THROW(brauer(reg, subgroup_of_order(catalog("C2xC2"), 2)), std::invalid_argument);
    EXPECT_THROW(BrauerQuotient(c2, 3), NotPSubgroup);
}

TEST(BrauerOnMap, Examples)
{
    FieldSpec f(2);
    auto c2 = catalog("C2");
    auto G = whole_group(c2), one = trivial_subgroup(c2);
    auto id = identity_map(coset_module(one, f));
    auto psi_id = brauer_on_map(id, one);
    EXPECT_EQ(psi_id.matrix(), FpMatrix::identity(f, 2));

    auto aug = mult_entry_map(AugmentationPolynomial::constant(1), one, G, f);
    auto psi_aug = brauer_on_map(aug, G);
    EXPECT_EQ(psi_aug.matrix().rows(), 1u);
    EXPECT_EQ(psi_aug.matrix().cols(), 0u);

    auto norm = mult_entry_map(AugmentationPolynomial::variable(0), G, one, f);
    EXPECT_EQ(norm.matrix(), FpMatrix::from_rows(f, {{1}, {1}}));
    auto psi_norm = brauer_on_map(norm, G);
    EXPECT_EQ(psi_norm.matrix().rows(), 0u);
    EXPECT_EQ(psi_norm.matrix().cols(), 1u);

    FpMatrix bad = FpMatrix::from_rows(f, {{1, 0}});
    EXPECT_THROW(ModuleMap(coset_module(one, f), unit_module(c2, f), bad), NotEquivariant);
}

TEST(RestrictInflateInduce, Examples)
{
    FieldSpec f(2);
    auto c4 = catalog("C4");
    auto c2 = subgroup_of_order(c4, 2);
    auto res = restrict(coset_module(trivial_subgroup(c4), f), c2);
    EXPECT_EQ(res.group().order(), 2u);
    auto orbits = res.basis().orbits();
    EXPECT_EQ(orbits.size(), 2u);
    for (const auto& o : orbits)
        EXPECT_EQ(o.points.size(), 2u);

    auto q = quotient(c2);
    auto trivial_on_quotient = unit_module(q.group, f);
    auto infl = inflate(trivial_on_quotient, q);
    EXPECT_EQ(infl.dimension(), 1u);
    EXPECT_TRUE(infl.group() == c4);
    for (int g = 0; g < 4; ++g)
        EXPECT_EQ(infl.act(g, 0), 0);

    // inflating k(Q) gives k(G/N)
    auto infl_reg = inflate(coset_module(trivial_subgroup(q.group), f), q);
    EXPECT_EQ(infl_reg.dimension(), 2u);
    EXPECT_EQ(infl_reg.basis().orbits().front().stabilizer, c2);

    auto ind = induce_coset(c2, c2, f);
    auto direct = coset_module(c2, f);
    EXPECT_EQ(ind.dimension(), direct.dimension());
}

TEST(HomSpace, Examples)
{
    FieldSpec f(3);
    auto s3 = catalog("S3");
    for (const auto& h : all_subgroups(s3))
        EXPECT_EQ(hom_space(coset_module(h, f), unit_module(s3, f)).size(), 1u);
    auto c3 = catalog("C3");
    auto norm = hom_space(unit_module(c3, f), coset_module(trivial_subgroup(c3), f));
    ASSERT_EQ(norm.size(), 1u);
    EXPECT_EQ(norm[0], FpMatrix::from_rows(f, {{1}, {1}, {1}}));
    EXPECT_TRUE(hom_space(unit_module(c3, f), zero_module(c3, f)).empty());
}

TEST(HomSpace, AgreesWithLinearSystem)
{
    for (auto d : {"C4", "C2xC2", "S3", "D4", "Q8"})
    {
        auto g = catalog(d);
        FieldSpec f(2);
        auto subs = all_subgroups(g);
        for (const auto& a : subs)
            for (const auto& b : subs)
            {
                auto m = coset_module(a, f), n = coset_module(b, f);
                auto basis = hom_space(m, n);
                EXPECT_EQ(basis.size(), hom_dim_by_linear_system(m, n)) << d;
                for (const auto& x : basis)
                    EXPECT_TRUE(is_equivariant(m, n, x, true));
            }
    }
}

TEST(MultEntry, Examples)
{
    FieldSpec f2(2);
    auto c2 = catalog("C2");
    auto norm = mult_entry_map(AugmentationPolynomial::parse("t"), whole_group(c2), trivial_subgroup(c2), f2);
    EXPECT_EQ(norm.matrix(), FpMatrix::from_rows(f2, {{1}, {1}}));

    auto e = catalog("C2xC2");
    auto n0 = generate_subgroup(e, {e.generators()[0]});
    auto x = mult_entry_map(AugmentationPolynomial::parse("x"), n0, trivial_subgroup(e), f2);
    EXPECT_TRUE(x.equivariant_on_all_elements());
    EXPECT_THROW(mult_entry_map(AugmentationPolynomial::parse("y"), n0, trivial_subgroup(e), f2), IllDefinedEntry);

    FieldSpec f3(3);
    auto c3 = catalog("C3");
    auto t2 = mult_entry_map(AugmentationPolynomial::parse("t^2"), trivial_subgroup(c3), trivial_subgroup(c3), f3);
    EXPECT_EQ(rank(t2.matrix()), 1u);
}

TEST(MultEntry, PolynomialParsing)
{
    EXPECT_EQ(AugmentationPolynomial::parse("x + y").to_string(), "x2+x1");
    EXPECT_EQ(AugmentationPolynomial::parse("2xy").to_string(), "2x1x2");
    EXPECT_EQ(AugmentationPolynomial::parse("-1").to_string(), "-1");
    EXPECT_EQ(AugmentationPolynomial::parse("t^2 - t^2").to_string(), "0");
    EXPECT_THROW(AugmentationPolynomial::parse("x +"), PolynomialSyntaxError);
    EXPECT_THROW(AugmentationPolynomial::parse("w"), PolynomialSyntaxError);
    // -1 in characteristic 2 is 1
    FieldSpec f2(2);
    auto c2 = catalog("C2");
    EXPECT_EQ(AugmentationPolynomial::parse("-1").evaluate(c2, f2), AugmentationPolynomial::parse("1").evaluate(c2, f2));
}

TEST(Properties, PsiFormulaUpTo16)
{
    for (const auto& d : catalog_descriptors(16))
    {
        auto g = catalog(d);
        for (unsigned p : {2u, 3u})
        {
            if (g.order() % p != 0)
                continue;
            FieldSpec f(p);
            auto subs = all_subgroups(g);
            for (const auto& h : subs)
            {
                if (!is_p_subgroup(h, p))
                    continue;
                BrauerQuotient psi(h, p);
                for (const auto& k : subs)
                {
                    auto dim = psi.on_module(coset_module(k, f)).module.dimension();
                    auto expected = is_subconjugate(h, k) ? transporter(h, k).size() / k.order() : 0;
                    EXPECT_EQ(dim, expected) << d << " p=" << p;
                }
            }
        }
    }
}

TEST(Properties, FixedPointsCountOrbitsAndFrobeniusReciprocity)
{
    for (auto d : {"C4", "C2xC2", "S3", "D4", "Q8", "A4"})
    {
        auto g = catalog(d);
        FieldSpec f(2);
        auto subs = all_subgroups(g);
        for (const auto& k : subs)
        {
            auto m = coset_module(k, f);
            for (const auto& h : subs)
            {
                auto fp = fixed_points(m, h);
                EXPECT_EQ(fp.dimension, m.basis().orbits_under(h).size());
                EXPECT_EQ(hom_space(coset_module(h, f), m).size(), fp.dimension) << d;
            }
        }
    }
}

TEST(Properties, BrauerIsFunctorial)
{
    std::mt19937_64 rng(17);
    for (auto d : {"C4", "C2xC2", "D4", "S3"})
    {
        auto g = catalog(d);
        FieldSpec f(2);
        auto subs = all_subgroups(g);
        std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
        for (int trial = 0; trial < 25; ++trial)
        {
            auto a = coset_module(subs[pick(rng)], f), b = coset_module(subs[pick(rng)], f);
            auto c = coset_module(subs[pick(rng)], f);
            ModuleMap fab(a, b, random_equivariant(a, b, rng)), gbc(b, c, random_equivariant(b, c, rng));
            for (const auto& h : subs)
            {
                if (!is_p_subgroup(h, 2))
                    continue;
                auto lhs = brauer_on_map(compose(gbc, fab), h);
                auto rhs = compose(brauer_on_map(gbc, h), brauer_on_map(fab, h));
                EXPECT_EQ(lhs.matrix(), rhs.matrix()) << d;
                EXPECT_TRUE(lhs.equivariant_on_all_elements());
            }
        }
    }
}

TEST(Properties, ConstructedMapsAreEquivariantOnAllElements)
{
    std::mt19937_64 rng(23);
    auto g = catalog("D4");
    FieldSpec f(2);
    auto subs = all_subgroups(g);
    for (const auto& a : subs)
        for (const auto& b : subs)
        {
            auto m = coset_module(a, f), n = coset_module(b, f);
            EXPECT_TRUE(ModuleMap(m, n, random_equivariant(m, n, rng)).equivariant_on_all_elements());
        }
}

TEST(GSet, RejectsNonActions)
{
    auto c2 = catalog("C2");
    EXPECT_THROW(GSet(c2, 2, {0, 1, 0, 0}), std::invalid_argument);
}
