#include <gtest/gtest.h>

#include <random>

#include "permtt/catalog.hpp"
#include "permtt/residue_objects.hpp"

using namespace permtt;

namespace
{
std::size_t failing_cells(const ResidueCertificate& c)
{
    std::size_t n = 0;
    for (const auto& cell : c.hom_table)
        n += cell.dimension != cell.expected;
    return n;
}
} // namespace

TEST(ResidueC2, CertificatePassesAndIsCompact)
{
    auto c = build_S_C2(FieldSpec(2));
    EXPECT_TRUE(validate(c.s).valid);
    auto cert = kappa_conditions_check(c);
    EXPECT_TRUE(cert.pass) << (cert.failures.empty() ? "" : cert.failures.front());
    EXPECT_EQ(cert.section_scalar, 1u);
    EXPECT_EQ(cert.compactness.verdict, Compactness::Compact);
    for (const auto& cell : cert.hom_table)
    {
        const bool top = cell.subgroup.order() == 2 && cell.shift == 0;
        EXPECT_EQ(cell.dimension, top ? 1u : 0u) << cell.subgroup.order() << " " << cell.shift;
    }
}

TEST(ResidueCp, OddPrimesPassAndAreNotCompact)
{
    for (unsigned p : {3u, 5u})
    {
        auto c = build_S_Cp(p);
        ASSERT_TRUE(validate(c.s).valid) << validate(c.s).reason;
        auto cert = kappa_conditions_check(c);
        EXPECT_TRUE(cert.pass) << p;
        EXPECT_EQ(cert.compactness.verdict, Compactness::NotCompact);
        ASSERT_TRUE(cert.compactness.psi_homology.has_value());
        EXPECT_TRUE(cert.compactness.psi_homology->tail_nonzero());
        EXPECT_EQ(cert.compactness.psi_homology->at(0), 1u);
        // the window is wide enough to reach two full periods below the junction
        auto w = default_degree_window(c.s);
        EXPECT_LE(-w.highest_shift, c.s.analysis_floor() + 1);
    }
}

TEST(ResidueCp, ConsecutiveMapsComposeToZeroIncludingJunction)
{
    for (unsigned p : {3u, 5u})
    {
        auto c = build_S_Cp(p);
        for (int n = c.s.analysis_floor(); n < 0; ++n)
            EXPECT_TRUE((c.s.differential(n + 1) * c.s.differential(n)).is_zero()) << "p=" << p << " n=" << n;
    }
}

// The displayed Klein-four complex is well defined and has the right section,
// but H^0(S^N) = k for each order-2 subgroup N: the augmentation R^N -> k
// sends orbit sums to 2 = 0.
TEST(ResidueKlein, FailsExactlyAtCyclicSubgroupsInDegreeZero)
{
    auto c = build_S_klein(FieldSpec(2));
    EXPECT_TRUE(validate(c.s).valid);
    auto cert = kappa_conditions_check(c);
    EXPECT_TRUE(cert.zeta_check.valid);
    EXPECT_TRUE(cert.sigma_check.valid);
    EXPECT_EQ(cert.section_scalar, 1u);
    EXPECT_EQ(cert.compactness.verdict, Compactness::NotCompact);
    EXPECT_FALSE(cert.hom_conditions);
    EXPECT_FALSE(cert.pass);
    for (const auto& cell : cert.hom_table)
    {
        const bool cyclic_at_zero = cell.subgroup.order() == 2 && cell.shift == 0;
        if (cyclic_at_zero)
            EXPECT_EQ(cell.dimension, 1u);
        else
            EXPECT_EQ(cell.dimension, cell.expected) << cell.subgroup.order() << " " << cell.shift;
    }
    EXPECT_EQ(failing_cells(cert), 3u);
}

TEST(ResidueKlein, FixedPointHomologyAtOrderTwoSubgroups)
{
    auto c = build_S_klein(FieldSpec(2));
    for (const auto& h : all_subgroups(c.group))
    {
        if (h.order() != 2)
            continue;
        auto t = homology(apply_functor(c.s, CategoricalFixedPoints(h)));
        EXPECT_EQ(t.at(0), 1u);
        for (int n = -8; n < 0; ++n)
            EXPECT_EQ(t.at(n), 0u) << n;
    }
}

TEST(Residue, ZeroZetaFailsTheSection)
{
    auto c = build_S_C2(FieldSpec(2));
    c.zeta.components.clear();
    auto cert = kappa_conditions_check(c);
    EXPECT_FALSE(cert.pass);
    EXPECT_NE(cert.section_scalar, std::optional<std::uint32_t>(1));
}

TEST(Residue, BuildResidueForRejectsOtherGroups)
{
    EXPECT_THROW(build_residue_for(catalog("S3"), 2), std::invalid_argument);
    EXPECT_THROW(build_residue_for(catalog("C4"), 2), std::invalid_argument);
    EXPECT_THROW(build_residue_for(catalog("C3"), 2), std::invalid_argument);
    EXPECT_NO_THROW(build_residue_for(catalog("C5"), 5));
}

TEST(Mutation, ZeroingAnyC2EntryBreaksTheCertificate)
{
    auto base = blueprint_S_C2(catalog("C2"), FieldSpec(2));
    std::size_t mutated = 0;
    for (auto& [deg, table] : base.window_maps)
        for (std::size_t r = 0; r < table.size(); ++r)
            for (std::size_t col = 0; col < table[r].size(); ++col)
            {
                if (table[r][col].is_zero())
                    continue;
                auto b = base;
                b.window_maps[deg][r][col] = AugmentationPolynomial::constant(0);
                auto cert = kappa_conditions_check(make_candidate(b));
                EXPECT_FALSE(cert.pass) << "d" << deg << "[" << r << "][" << col << "]";
                ++mutated;
            }
    EXPECT_EQ(mutated, 2u);
}

TEST(Mutation, SampledEntriesOfOddPrimeCandidates)
{
    std::mt19937_64 rng(99);
    for (unsigned p : {3u, 5u})
    {
        auto base = build_S_Cp(p).blueprint;
        std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> spots;
        for (std::size_t j = 0; j < base.pattern_maps.size(); ++j)
            for (std::size_t r = 0; r < base.pattern_maps[j].size(); ++r)
                for (std::size_t col = 0; col < base.pattern_maps[j][r].size(); ++col)
                    if (!base.pattern_maps[j][r][col].is_zero())
                        spots.push_back({j, {r, col}});
        std::shuffle(spots.begin(), spots.end(), rng);
        for (std::size_t s = 0; s < std::min<std::size_t>(4, spots.size()); ++s)
        {
            auto b = base;
            auto [j, rc] = spots[s];
            b.pattern_maps[j][rc.first][rc.second] = AugmentationPolynomial::constant(0);
            auto cand = make_candidate(b);
            auto cert = kappa_conditions_check(cand);
            EXPECT_FALSE(cert.pass) << "p=" << p << " pattern " << j;
        }
    }
}
