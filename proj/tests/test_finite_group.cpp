#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "permtt/catalog.hpp"

using namespace permtt;

namespace
{
std::size_t subgroups_of_order(const FiniteGroup& g, std::size_t n)
{
    std::size_t c = 0;
    for (const auto& s : all_subgroups(g))
        c += s.order() == n;
    return c;
}

std::size_t largest_power_dividing(std::size_t n, unsigned p)
{
    std::size_t q = 1;
    while (n % p == 0)
    {
        n /= p;
        q *= p;
    }
    return q;
}

// Brute-force lattice: closure of every subset generated by at most two elements
// suffices for the small groups below, since each of their subgroups is
// generated by two elements.
std::set<std::vector<int>> two_generated_subgroups(const FiniteGroup& g)
{
    std::set<std::vector<int>> out;
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
        for (int b = a; b < static_cast<int>(g.order()); ++b)
            out.insert(generate_subgroup(g, {a, b}).members());
    return out;
}
} // namespace

TEST(Catalog, Examples)
{
    auto v = catalog("C2xC2");
    EXPECT_EQ(v.order(), 4u);
    EXPECT_EQ(exponent(whole_group(v)), 2u);

    auto q8 = catalog("Q8");
    EXPECT_EQ(q8.order(), 8u);
    EXPECT_EQ(involution_count(whole_group(q8)), 1u);

    auto s3 = catalog("S3");
    EXPECT_EQ(s3.order(), 6u);
    EXPECT_FALSE(s3.is_abelian());
}

TEST(Catalog, DescriptorGrammar)
{
    EXPECT_EQ(catalog("C8").order(), 8u);
    EXPECT_TRUE(is_cyclic(whole_group(catalog("c8"))));
    auto e = catalog("C2xC2xC2");
    EXPECT_EQ(e.order(), 8u);
    EXPECT_EQ(exponent(whole_group(e)), 2u);
    EXPECT_EQ(catalog("Q8xC3").order(), 24u);
    EXPECT_EQ(catalog("E3^2").order(), 9u);
    EXPECT_EQ(catalog("D4").order(), 8u);
    EXPECT_EQ(catalog("A4").order(), 12u);
    EXPECT_EQ(parse_descriptor("c2xq8").canonical(), "C2xQ8");
    EXPECT_THROW(catalog("ZZZ"), DescriptorError);
    EXPECT_THROW(catalog("C2x"), DescriptorError);
    EXPECT_THROW(catalog("E4^2"), DescriptorError);
    EXPECT_THROW(catalog("C128"), OrderCapExceeded);
    EXPECT_EQ(catalog("C128", 128).order(), 128u);
    try
    {
        catalog("C2xZ3");
        FAIL();
    }
    catch (const DescriptorError& e)
    {
        EXPECT_EQ(e.position, 3u);
    }
}

TEST(AllSubgroups, Examples)
{
    EXPECT_EQ(all_subgroups(catalog("Q8")).size(), 6u);
    EXPECT_EQ(all_subgroups(catalog("C2xC2")).size(), 5u);
    EXPECT_EQ(all_subgroups(catalog("C1")).size(), 1u);
    EXPECT_EQ(all_subgroups(catalog("S3")).size(), 6u);
    EXPECT_EQ(all_subgroups(catalog("D4")).size(), 10u);
    EXPECT_EQ(all_subgroups(catalog("A4")).size(), 10u);
    EXPECT_EQ(all_subgroups(catalog("S4")).size(), 30u);
}

TEST(AllSubgroups, MatchesTwoGeneratedClosure)
{
    for (auto d : {"C2xC2", "Q8", "D4", "S3", "C2xC4", "A4", "D6"})
    {
        auto g = catalog(d);
        std::set<std::vector<int>> lattice;
        for (const auto& s : all_subgroups(g))
            lattice.insert(s.members());
        EXPECT_EQ(lattice, two_generated_subgroups(g)) << d;
    }
}

TEST(ConjugacyClasses, Examples)
{
    auto s3 = conjugacy_classes_of_subgroups(catalog("S3"), 2);
    ASSERT_EQ(s3.size(), 1u);
    EXPECT_EQ(s3[0].members.size(), 3u);

    for (const auto& cls : conjugacy_classes_of_subgroups(catalog("C4")))
        EXPECT_EQ(cls.members.size(), 1u);

    auto q8 = conjugacy_classes_of_subgroups(catalog("Q8"), 4);
    EXPECT_EQ(q8.size(), 3u);
    for (const auto& cls : q8)
        EXPECT_EQ(cls.members.size(), 1u);
}

TEST(Sylow, Examples)
{
    EXPECT_EQ(sylow_subgroup(catalog("S3"), 2).order(), 2u);
    EXPECT_EQ(sylow_subgroup(catalog("S3"), 3).order(), 3u);
    EXPECT_EQ(sylow_subgroup(catalog("C5"), 2).order(), 1u);
}

TEST(IsCyclic, Examples)
{
    EXPECT_TRUE(is_cyclic(whole_group(catalog("C8"))));
    EXPECT_FALSE(is_cyclic(whole_group(catalog("C2xC2"))));
    EXPECT_FALSE(is_cyclic(whole_group(catalog("Q8"))));
    EXPECT_TRUE(is_cyclic(whole_group(catalog("C2xC3"))));
}

TEST(Frattini, Examples)
{
    auto q8 = catalog("Q8");
    auto phi = frattini_subgroup(q8);
    EXPECT_EQ(phi.order(), 2u);
    EXPECT_TRUE(is_normal(phi));
    EXPECT_EQ(frattini_subgroup(catalog("C2xC2")).order(), 1u);
    auto c8 = frattini_subgroup(catalog("C8"));
    EXPECT_EQ(c8.order(), 4u);
    EXPECT_TRUE(is_cyclic(c8));
    // the Frattini quotient of Q8 is a Klein four group
    auto q = quotient(phi);
    EXPECT_TRUE(is_klein_four(whole_group(q.group)));
}

TEST(Weyl, Examples)
{
    auto c4 = catalog("C4");
    auto c2 = sylow_subgroup(catalog("C4"), 2);
    auto half = generate_subgroup(c4, {c4.power(c4.generators()[0], 2)});
    EXPECT_EQ(weyl_group(half).quotient.group.order(), 2u);

    auto s3 = catalog("S3");
    auto transposition = conjugacy_classes_of_subgroups(s3, 2).front().representative;
    EXPECT_EQ(weyl_group(transposition).quotient.group.order(), 1u);

    EXPECT_EQ(weyl_group(whole_group(c4)).quotient.group.order(), 1u);
    (void)c2;
}

TEST(Subconjugate, Examples)
{
    auto s3 = catalog("S3");
    auto classes = conjugacy_classes_of_subgroups(s3, 2).front().members;
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_TRUE(is_subconjugate(trivial_subgroup(s3), classes[1]));
    EXPECT_TRUE(is_subconjugate(classes[0], classes[2]));

    auto c4 = catalog("C4");
    auto half = generate_subgroup(c4, {c4.power(c4.generators()[0], 2)});
    EXPECT_FALSE(is_subconjugate(half, trivial_subgroup(c4)));
}

TEST(Trichotomy, Examples)
{
    EXPECT_EQ(two_group_trichotomy(catalog("C16")).branch, TwoGroupBranch::Cyclic);
    auto d = two_group_trichotomy(catalog("D4"));
    EXPECT_EQ(d.branch, TwoGroupBranch::ContainsKleinFour);
    EXPECT_TRUE(is_klein_four(d.witness));
    EXPECT_EQ(two_group_trichotomy(catalog("D8")).branch, TwoGroupBranch::ContainsKleinFour);
    auto q = two_group_trichotomy(catalog("Q16"));
    EXPECT_EQ(q.branch, TwoGroupBranch::ContainsQ8);
    EXPECT_TRUE(is_quaternion_eight(q.witness));
    EXPECT_THROW(two_group_trichotomy(catalog("S3")), std::invalid_argument);
}

TEST(Quotient, OrdersAndValidation)
{
    auto a4 = catalog("A4");
    for (const auto& n : all_subgroups(a4))
    {
        if (!is_normal(n))
        {
            EXPECT_THROW(quotient(n), std::invalid_argument);
            continue;
        }
        auto q = quotient(n);
        EXPECT_EQ(q.group.order() * n.order(), a4.order());
        // the coset map is a homomorphism
        for (int a = 0; a < static_cast<int>(a4.order()); ++a)
            for (int b = 0; b < static_cast<int>(a4.order()); ++b)
                EXPECT_EQ(q.coset_of[static_cast<std::size_t>(a4.mul(a, b))],
                          q.group.mul(q.coset_of[static_cast<std::size_t>(a)], q.coset_of[static_cast<std::size_t>(b)]));
    }
}

TEST(Properties, LagrangeAndConjugationClosureUpTo32)
{
    for (const auto& d : catalog_descriptors(32))
    {
        auto g = catalog(d);
        auto subs = all_subgroups(g);
        std::set<std::vector<int>> lattice;
        for (const auto& s : subs)
        {
            EXPECT_EQ(g.order() % s.order(), 0u) << d;
            lattice.insert(s.members());
        }
        EXPECT_EQ(lattice.size(), subs.size()) << d;
        for (const auto& s : subs)
            for (int x : g.generators())
                EXPECT_TRUE(lattice.count(conjugate(s, x).members())) << d;
    }
}

TEST(Properties, SylowOrderIsLargestPrimePower)
{
    for (const auto& d : catalog_descriptors(32))
    {
        auto g = catalog(d);
        for (unsigned p : {2u, 3u, 5u, 7u})
            EXPECT_EQ(sylow_subgroup(g, p).order(), largest_power_dividing(g.order(), p)) << d << " p=" << p;
    }
}

TEST(Properties, TrichotomyCoversEveryTwoGroupUpTo32)
{
    for (const auto& d : catalog_two_groups(32))
    {
        auto t = two_group_trichotomy(catalog(d));
        switch (t.branch)
        {
        case TwoGroupBranch::Cyclic:
            EXPECT_TRUE(is_cyclic(t.witness)) << d;
            break;
        case TwoGroupBranch::ContainsKleinFour:
            EXPECT_TRUE(is_klein_four(t.witness)) << d;
            break;
        case TwoGroupBranch::ContainsQ8:
            EXPECT_TRUE(is_quaternion_eight(t.witness)) << d;
            break;
        }
    }
}

TEST(Properties, FrattiniOfCyclicTwoGroupsHasIndexTwo)
{
    for (unsigned n = 2; n <= 32; n *= 2)
    {
        auto g = catalog("C" + std::to_string(n));
        EXPECT_EQ(g.order() / frattini_subgroup(g).order(), 2u);
    }
}

TEST(FromElements, RejectsNonClosedLists)
{
    EXPECT_THROW(FiniteGroup::from_elements(3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}}, {1}), std::invalid_argument);
}
