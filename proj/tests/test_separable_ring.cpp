#include <gtest/gtest.h>

#include "permtt/catalog.hpp"
#include "permtt/separable_ring.hpp"

using namespace permtt;

TEST(SeparableRing, StructureOfSmallExample)
{
    auto s3 = catalog("S3");
    FieldSpec f(3);
    Subgroup h = generate_subgroup(s3, {s3.generators()[1]});
    auto d = ring_structure(h, f);
    const auto n = d.ring.dimension();
    EXPECT_EQ(n, 6 / h.order());
    EXPECT_EQ(d.ring_squared.dimension(), n * n);
    EXPECT_EQ(d.unit.rows(), n);
    EXPECT_EQ(d.mult.cols(), n * n);
    EXPECT_EQ(d.section.rows(), n * n);
    EXPECT_TRUE(check_separability(d).pass);
}

TEST(SeparableRing, AllSubgroupsOfSmallGroups)
{
    std::size_t pairs = 0;
    for (const auto& desc : catalog_descriptors(12))
    {
        auto g = catalog(desc);
        for (unsigned p : {2u, 3u})
            for (const auto& h : all_subgroups(g))
            {
                auto cert = check_separability(ring_structure(h, FieldSpec(p)));
                EXPECT_TRUE(cert.pass) << desc << " |H|=" << h.order() << " p=" << p;
                ++pairs;
            }
    }
    EXPECT_GT(pairs, 100u);
}

TEST(SeparableRing, EverySingleEntryMutationOfMultiplicationFails)
{
    for (auto desc : {"C2", "C4", "S3", "C2xC2"})
    {
        auto g = catalog(desc);
        FieldSpec f(2);
        auto d = ring_structure(trivial_subgroup(g), f);
        for (std::size_t r = 0; r < d.mult.rows(); ++r)
            for (std::size_t c = 0; c < d.mult.cols(); ++c)
            {
                auto bad = d;
                bad.mult(r, c) = f.add(bad.mult(r, c), 1);
                EXPECT_FALSE(check_separability(bad).pass) << desc << " " << r << "," << c;
            }
    }
}

TEST(SeparableRing, CertificateNamesEachIdentity)
{
    auto cert = check_separability(ring_structure(whole_group(catalog("C3")), FieldSpec(3)));
    EXPECT_GE(cert.checks.size(), 8u);
    for (const auto& c : cert.checks)
        EXPECT_FALSE(c.name.empty());
}
