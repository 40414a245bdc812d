#include "permtt/separable_ring.hpp"

namespace permtt
{

SeparableRingData ring_structure(const Subgroup& h, FieldSpec field)
{
    auto a = coset_module(h, field);
    auto a2 = tensor(a, a);
    const auto n = a.dimension();
    FpMatrix unit(field, n, 1), mult(field, n, n * n), section(field, n * n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
        unit(i, 0) = 1;
        mult(i, i * n + i) = 1;
        section(i * n + i, i) = 1;
    }
    return {h, a, a2, unit, mult, section};
}

SeparabilityCertificate check_separability(const SeparableRingData& d)
{
    const auto& f = d.ring.field();
    const auto n = d.ring.dimension();
    const auto id = FpMatrix::identity(f, n);
    FpMatrix swap(f, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            swap(j * n + i, i * n + j) = 1;

    SeparabilityCertificate cert;
    auto check = [&](std::string name, bool holds) { cert.checks.push_back({std::move(name), holds}); };
    auto shapes_ok = d.unit.rows() == n && d.unit.cols() == 1 && d.mult.rows() == n && d.mult.cols() == n * n &&
                     d.section.rows() == n * n && d.section.cols() == n;
    check("shapes", shapes_ok);
    if (!shapes_ok)
        return cert;

    check("unit is equivariant", is_equivariant(unit_module(d.ring.group(), f), d.ring, d.unit, true));
    check("mult is equivariant", is_equivariant(d.ring_squared, d.ring, d.mult, true));
    check("section is equivariant", is_equivariant(d.ring, d.ring_squared, d.section, true));

    const auto sigma_mu = d.section * d.mult;
    check("mult o section = id", d.mult * d.section == id);
    check("(1 x mult)(section x 1) = section o mult", kronecker(id, d.mult) * kronecker(d.section, id) == sigma_mu);
    check("(mult x 1)(1 x section) = section o mult", kronecker(d.mult, id) * kronecker(id, d.section) == sigma_mu);
    check("mult(unit x 1) = id", d.mult * kronecker(d.unit, id) == id);
    check("mult(1 x unit) = id", d.mult * kronecker(id, d.unit) == id);
    check("mult(mult x 1) = mult(1 x mult)", d.mult * kronecker(d.mult, id) == d.mult * kronecker(id, d.mult));
    check("mult o swap = mult", d.mult * swap == d.mult);

    cert.pass = true;
    for (const auto& c : cert.checks)
        cert.pass = cert.pass && c.holds;
    return cert;
}

} // namespace permtt
