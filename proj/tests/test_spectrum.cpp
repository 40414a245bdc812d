#include <gtest/gtest.h>

#include <random>

#include "permtt/catalog.hpp"
#include "permtt/spectrum.hpp"

using namespace permtt;

namespace
{
bool supported_at(const std::vector<ClosedPoint>& support, const Subgroup& h)
{
    for (const auto& pt : support)
        for (const auto& c : pt.conjugates)
            if (c == h)
                return true;
    return false;
}
} // namespace

TEST(ClosedPoints, Counts)
{
    EXPECT_EQ(closed_points(catalog("C2"), 2).size(), 2u);
    EXPECT_EQ(closed_points(catalog("C4"), 2).size(), 3u);
    EXPECT_EQ(closed_points(catalog("C8"), 2).size(), 4u);
    EXPECT_EQ(closed_points(catalog("C16"), 2).size(), 5u);
    EXPECT_EQ(closed_points(catalog("C2xC2"), 2).size(), 5u);
    EXPECT_EQ(closed_points(catalog("C5"), 2).size(), 1u);
    EXPECT_EQ(closed_points(catalog("S3"), 2).size(), 2u);
    EXPECT_EQ(closed_points(catalog("S3"), 3).size(), 2u);
    auto pts = closed_points(catalog("D4"), 2);
    EXPECT_EQ(pts.front().representative.order(), 1u);
    EXPECT_THROW(closed_points(catalog("C4"), 4), std::invalid_argument);
}

TEST(ClosedIdeal, Examples)
{
    FieldSpec f(2);
    auto c2 = catalog("C2");
    auto pts = closed_points(c2, 2);
    auto unit = BoundedComplex::concentrated(unit_module(c2, f), 0);
    auto free = BoundedComplex::concentrated(coset_module(trivial_subgroup(c2), f), 0);
    // the unit lies in no closed ideal
    for (const auto& pt : pts)
        EXPECT_FALSE(in_closed_ideal(pt, unit));
    // k(C2) is killed by Psi^{C2} only
    EXPECT_FALSE(in_closed_ideal(pts[0], free));
    EXPECT_TRUE(in_closed_ideal(pts[1], free));
    EXPECT_TRUE(in_closed_ideal(pts[1], BoundedComplex::zero(c2, f)));
}

TEST(Properties, SupportOfCosetModuleIsSubconjugateClasses)
{
    for (auto d : {"C4", "C2xC2", "D4", "Q8", "S3", "A4", "C8"})
    {
        auto g = catalog(d);
        FieldSpec f(2);
        for (const auto& k : all_subgroups(g))
        {
            auto x = BoundedComplex::concentrated(coset_module(k, f), 0);
            auto supp = closed_support(x, 2);
            for (const auto& pt : closed_points(g, 2))
                EXPECT_EQ(supported_at(supp, pt.representative), is_subconjugate(pt.representative, k)) << d;
        }
    }
}

TEST(Properties, SupportOfDirectSumIsUnion)
{
    FieldSpec f(2);
    for (auto d : {"C4", "C2xC2", "D4"})
    {
        auto g = catalog(d);
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 10; ++trial)
        {
            auto a = random_complex(g, f, rng), b = random_complex(g, f, rng);
            auto sab = closed_support(direct_sum(a, b), 2);
            auto sa = closed_support(a, 2), sb = closed_support(b, 2);
            for (const auto& pt : closed_points(g, 2))
            {
                const auto& h = pt.representative;
                EXPECT_EQ(supported_at(sab, h), supported_at(sa, h) || supported_at(sb, h)) << d;
            }
        }
    }
}

TEST(Properties, ClosedIdealsAreTensorIdeals)
{
    FieldSpec f(2);
    auto g = catalog("C2xC2");
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial)
    {
        auto x = random_complex(g, f, rng);
        for (const auto& pt : closed_points(g, 2))
        {
            if (!in_closed_ideal(pt, x))
                continue;
            for (const auto& k : all_subgroups(g))
                EXPECT_TRUE(in_closed_ideal(pt, tensor_with_module(x, coset_module(k, f))));
        }
    }
}

TEST(Properties, CosetsOfMaximalSubgroupsCoverAllButTheTop)
{
    FieldSpec f(2);
    for (auto d : {"C4", "C2xC2", "D4", "Q8"})
    {
        auto g = catalog(d);
        std::vector<ClosedPoint> covered;
        for (const auto& m : maximal_subgroups(g))
            for (auto& pt : closed_support(BoundedComplex::concentrated(coset_module(m, f), 0), 2))
                covered.push_back(pt);
        for (const auto& pt : closed_points(g, 2))
            EXPECT_EQ(supported_at(covered, pt.representative), pt.representative.order() < g.order()) << d;
    }
}
