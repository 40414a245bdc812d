#include "permtt/residue_objects.hpp"

#include "permtt/catalog.hpp"

namespace permtt
{

namespace
{
using Poly = AugmentationPolynomial;

Poly t_pow(unsigned e) { return e == 0 ? Poly::constant(1) : Poly::variable(0, e); }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

bool is_cyclic_of_order(const FiniteGroup& g, std::size_t n)
{
    return g.order() == n && is_cyclic(whole_group(g));
}
} // namespace

std::string to_string(Compactness c)
{
    switch (c)
    {
    case Compactness::Compact:
        return "Compact";
    case Compactness::NotCompact:
        return "NotCompact";
    case Compactness::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

ComplexBlueprint blueprint_S_C2(const FiniteGroup& c2, FieldSpec field)
{
    require(field.p() == 2, "the C2 residue complex lives in characteristic 2");
    require(is_cyclic_of_order(c2, 2) && c2.generators().size() == 1, "expected C2 with one generator");
    auto G = whole_group(c2), one = trivial_subgroup(c2);
    ComplexBlueprint b{c2, field, {}, {}, {}, {}, {}};
    b.window = {{0, {G}}, {-1, {one}}, {-2, {G}}};
    b.window_maps = {{-2, {{t_pow(1)}}}, {-1, {{t_pow(0)}}}};
    return b;
}

ComplexBlueprint blueprint_S_Cp(const FiniteGroup& cp, FieldSpec field)
{
    const unsigned p = field.p();
    require(p % 2 == 1, "the periodic C_p residue complex needs an odd prime");
    require(is_cyclic_of_order(cp, p) && cp.generators().size() == 1, "expected C_p with one generator");
    auto G = whole_group(cp), one = trivial_subgroup(cp);
    const auto minus_one = Poly::constant(-1), zero = Poly{};
    // rows are target summands, columns source summands; R = k(G/1), k = k(G/G)
    EntryTable h{{t_pow(1), t_pow(p - 1)}};
    EntryTable g{{t_pow(p - 2), t_pow(p - 1)}, {minus_one, zero}};
    EntryTable f{{t_pow(1), t_pow(p - 1)}, {minus_one, zero}};

    ComplexBlueprint b{cp, field, {}, {}, {}, {}, {}};
    b.window = {{0, {G}}, {-1, {one}}, {-2, {one, G}}};
    b.window_maps = {{-1, {{t_pow(0)}}}, {-2, h}};
    b.pattern = {{one, G}, {one, G}};
    b.pattern_maps = {g, f};
    b.junction = g;
    return b;
}

ComplexBlueprint blueprint_S_klein(const FiniteGroup& e, FieldSpec field)
{
    require(field.p() == 2, "the Klein four residue complex lives in characteristic 2");
    require(e.order() == 4 && is_klein_four(whole_group(e)) && e.generators().size() == 2,
            "expected C2xC2 with two generators");
    const int g1 = e.generators()[0], g2 = e.generators()[1];
    auto G = whole_group(e), one = trivial_subgroup(e);
    auto n0 = generate_subgroup(e, {g1}), n1 = generate_subgroup(e, {g2}), ninf = generate_subgroup(e, {e.mul(g1, g2)});
    const auto x = Poly::variable(0), y = Poly::variable(1), c1 = Poly::constant(1), zero = Poly{};

    // M = R/(x) + R/(y) + R/(x+y), N = R + k + k
    EntryTable h{{x, y, x + y}};
    EntryTable f{{x, y, x + y}, {c1, zero, c1}, {zero, c1, c1}}; // M -> N
    EntryTable g{{c1, zero, y}, {c1, x, zero}, {c1, x, y}};       // N -> M

    ComplexBlueprint b{e, field, {}, {}, {}, {}, {}};
    b.window = {{0, {G}}, {-1, {one}}};
    b.window_maps = {{-1, {{c1}}}};
    b.pattern = {{n0, n1, ninf}, {one, G, G}};
    b.pattern_maps = {f, g};
    b.junction = h;
    return b;
}

ResidueCandidate make_candidate(ComplexBlueprint blueprint)
{
    auto s = realize(blueprint);
    const auto& field = blueprint.field;
    ChainMap zeta, sigma;
    const auto top = s.term(0).dimension();
    zeta.components.emplace(0, top == 1 ? FpMatrix::identity(field, 1) : FpMatrix(field, top, 1));
    // Psi^G keeps exactly the G-fixed basis points of S^0
    std::size_t fixed = 0;
    const auto& basis = s.term(0).basis();
    for (std::size_t x = 0; x < basis.size(); ++x)
    {
        bool all = true;
        for (int gen : s.group().generators())
            all = all && basis.act(gen, static_cast<int>(x)) == static_cast<int>(x);
        fixed += all ? 1 : 0;
    }
    sigma.components.emplace(0, fixed == 1 ? FpMatrix::identity(field, 1) : FpMatrix(field, 1, fixed));
    auto group = blueprint.group;
    return ResidueCandidate{std::move(group), field, std::move(blueprint), std::move(s), std::move(zeta), std::move(sigma)};
}

ResidueCandidate build_S_C2(FieldSpec field) { return make_candidate(blueprint_S_C2(catalog("C2"), field)); }

ResidueCandidate build_S_Cp(unsigned p)
{
    require(p % 2 == 1 && is_prime(p), "build_S_Cp needs an odd prime");
    return make_candidate(blueprint_S_Cp(catalog("C" + std::to_string(p), std::max<std::size_t>(p, kDefaultOrderCap)),
                                         FieldSpec(p)));
}

ResidueCandidate build_S_klein(FieldSpec field) { return make_candidate(blueprint_S_klein(catalog("C2xC2"), field)); }

ResidueCandidate build_residue_for(const FiniteGroup& g, unsigned p)
{
    FieldSpec field(p);
    if (p == 2 && is_cyclic_of_order(g, 2))
        return make_candidate(blueprint_S_C2(g, field));
    if (p % 2 == 1 && is_cyclic_of_order(g, p))
        return make_candidate(blueprint_S_Cp(g, field));
    if (p == 2 && g.order() == 4 && is_klein_four(whole_group(g)))
        return make_candidate(blueprint_S_klein(g, field));
    throw std::invalid_argument("explicit residue complexes exist for C2 (p=2), C_p (p odd) and C2xC2 (p=2); the "
                                "residue conditions are stated for a p-group in characteristic p, and '" +
                                g.name() + "' at p=" + std::to_string(p) + " is not covered");
}

DegreeWindow default_degree_window(const PeriodicComplex& s)
{
    if (s.is_bounded())
    {
        const auto& w = s.window();
        return {-(w.max_degree() + 2), -(w.min_degree() - 2)};
    }
    const int lowest_degree = s.window_start() - 2 * static_cast<int>(s.period());
    return {-2, -lowest_degree};
}

CompactnessCertificate compactness_certificate(const ResidueCandidate& c)
{
    CompactnessCertificate out;
    if (c.s.is_bounded())
    {
        out.verdict = Compactness::Compact;
        out.reason = "S is a bounded complex of permutation modules";
        return out;
    }
    try
    {
        auto psi = apply_functor(c.s, ModularFixedPoints(whole_group(c.group), c.field.p()));
        auto table = homology(psi);
        out.psi_homology = table;
        if (table.tail_nonzero() && table.tail->consistent)
        {
            out.verdict = Compactness::NotCompact;
            out.reason = "Psi^G(S) has nonzero homology in every period below degree " +
                         std::to_string(table.tail->repeats_below + 1);
        }
        else
        {
            out.verdict = Compactness::Inconclusive;
            out.reason = table.tail_nonzero() ? "periodic homology of Psi^G(S) is not stable"
                                              : "Psi^G(S) has bounded homology";
        }
    }
    catch (const std::exception& e)
    {
        out.verdict = Compactness::Inconclusive;
        out.reason = std::string("Psi^G(S) could not be formed: ") + e.what();
    }
    return out;
}

ResidueCertificate kappa_conditions_check(const ResidueCandidate& c, std::optional<DegreeWindow> window)
{
    ResidueCertificate cert;
    const auto G = whole_group(c.group);
    const auto& field = c.field;
    auto fail = [&](std::string why) { cert.failures.push_back(std::move(why)); };

    cert.complex_check = validate(c.s);
    if (!cert.complex_check.valid)
    {
        fail("S is not a complex: " + cert.complex_check.reason);
        cert.compactness = compactness_certificate(c);
        return cert;
    }

    auto unit = BoundedComplex::concentrated(unit_module(c.group, field), 0);
    cert.zeta_check = validate_chain_map(unit, c.s, c.zeta);
    if (!cert.zeta_check.valid)
        fail("zeta is not a chain map: " + cert.zeta_check.reason);

    // Hom(k(G/K)[i], S) = H^{-i}(S^K), one K per conjugacy class
    const auto range = window.value_or(default_degree_window(c.s));
    cert.hom_conditions = true;
    for (const auto& cls : conjugacy_classes_of_subgroups(c.group))
    {
        const auto& k = cls.representative;
        auto table = homology(apply_functor(c.s, CategoricalFixedPoints(k)));
        if (table.tail && !table.tail->consistent)
        {
            cert.hom_conditions = false;
            fail("fixed points at " + describe(k) + " are not periodic over two periods");
        }
        for (int i = range.lowest_shift; i <= range.highest_shift; ++i)
        {
            HomCell cell{k, i, table.at(-i), (k == G && i == 0) ? 1u : 0u};
            if (cell.dimension != cell.expected)
            {
                cert.hom_conditions = false;
                fail("Hom(k(G/K)[" + std::to_string(i) + "], S) has dimension " + std::to_string(cell.dimension) +
                     " for K = " + describe(k) + ", expected " + std::to_string(cell.expected));
            }
            cert.hom_table.push_back(std::move(cell));
        }
    }

    // zeta spans H^0(S^G)
    {
        CategoricalFixedPoints fixed_g(G);
        auto fixed = apply_functor(c.s, fixed_g);
        auto z0 = c.zeta.components.count(0) ? c.zeta.components.at(0) : FpMatrix(field, c.s.term(0).dimension(), 1);
        auto v = fixed_g.on_matrix(unit.term(0), c.s.term(0), z0);
        auto boundaries = fixed.differential(-1);
        FpMatrix joined(field, boundaries.rows(), boundaries.cols() + 1);
        joined.place(boundaries, 0, 0);
        joined.place(v, 0, boundaries.cols());
        cert.zeta_not_null_homotopic = rank(joined) > rank(boundaries);
        if (!cert.zeta_not_null_homotopic)
            fail("zeta is null-homotopic");
    }

    try
    {
        ModularFixedPoints psi_functor(G, field.p());
        auto psi = apply_functor(c.s, psi_functor);
        auto psi_unit = BoundedComplex::concentrated(unit_module(psi.group(), field), 0);
        cert.sigma_check = validate_chain_map(psi, psi_unit, c.sigma);
        if (!cert.sigma_check.valid)
            fail("sigma is not a chain map: " + cert.sigma_check.reason);
        auto z0 = c.zeta.components.count(0) ? c.zeta.components.at(0) : FpMatrix(field, c.s.term(0).dimension(), 1);
        auto psi_zeta = psi_functor.on_matrix(unit.term(0), c.s.term(0), z0);
        auto s0 = c.sigma.components.count(0) ? c.sigma.components.at(0) : FpMatrix(field, 1, psi_zeta.rows());
        if (s0.cols() == psi_zeta.rows() && s0.rows() == 1)
        {
            cert.section_scalar = (s0 * psi_zeta)(0, 0);
            if (*cert.section_scalar != 1)
                fail("sigma o Psi^G(zeta) = " + std::to_string(*cert.section_scalar) + ", expected 1");
        }
        else
            fail("sigma and Psi^G(zeta) do not compose in degree 0");
    }
    catch (const std::exception& e)
    {
        cert.sigma_check = {false, 0, e.what()};
        fail(std::string("Psi^G(S) could not be formed: ") + e.what());
    }

    cert.compactness = compactness_certificate(c);
    cert.pass = cert.failures.empty();
    return cert;
}

} // namespace permtt
