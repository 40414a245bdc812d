#include "permtt/regularity.hpp"

#include "permtt/catalog.hpp"
#include "permtt/prime_field.hpp"

#include <stdexcept>

namespace permtt
{

std::string to_string(Verdict v) { return v == Verdict::Regular ? "Regular" : "NotRegular"; }

std::string to_string(RegularityReason r)
{
    switch (r)
    {
    case RegularityReason::NonModular:
        return "NonModular";
    case RegularityReason::P2SylowCyclic:
        return "P2SylowCyclic";
    case RegularityReason::OddPrimeWitnessCp:
        return "OddPrimeWitnessCp";
    case RegularityReason::KleinFourWitness:
        return "KleinFourWitness";
    case RegularityReason::Q8Witness:
        return "Q8Witness";
    }
    return "";
}

RegularityReport classify(const FiniteGroup& g, unsigned p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    RegularityReport r{g.name(), g.order(), p, g.order() % p == 0, Verdict::Regular, RegularityReason::NonModular, {}};
    if (!r.modular)
        return r;

    if (p != 2)
    {
        // Cauchy: some element has order divisible by p
        for (int a = 0; a < static_cast<int>(g.order()); ++a)
        {
            int ord = g.element_order(a);
            if (ord % static_cast<int>(p) == 0)
            {
                r.verdict = Verdict::NotRegular;
                r.reason = RegularityReason::OddPrimeWitnessCp;
                r.witness = generate_subgroup(g, {g.power(a, ord / static_cast<int>(p))});
                return r;
            }
        }
        throw std::logic_error("no element of order p although p divides |G|");
    }

    auto sylow = sylow_subgroup(g, 2);
    if (is_cyclic(sylow))
    {
        r.reason = RegularityReason::P2SylowCyclic;
        return r;
    }
    auto tri = two_group_trichotomy(as_group(sylow));
    std::vector<int> members;
    for (int i : tri.witness.members())
        members.push_back(sylow.members()[static_cast<std::size_t>(i)]);
    r.verdict = Verdict::NotRegular;
    r.reason = tri.branch == TwoGroupBranch::ContainsKleinFour ? RegularityReason::KleinFourWitness
                                                               : RegularityReason::Q8Witness;
    r.witness = Subgroup(g, std::move(members));
    return r;
}

bool verify_witness(const RegularityReport& r)
{
    if (r.verdict == Verdict::Regular)
        return !r.witness.has_value();
    if (!r.witness)
        return false;
    const auto& w = *r.witness;
    switch (r.reason)
    {
    case RegularityReason::OddPrimeWitnessCp:
        return w.order() == r.p && is_cyclic(w);
    case RegularityReason::KleinFourWitness:
        return is_klein_four(w);
    case RegularityReason::Q8Witness:
        return is_quaternion_eight(w);
    default:
        return false;
    }
}

std::vector<PointStatus> cyclic_point_report(unsigned n, unsigned p)
{
    if (n < 1)
        throw std::invalid_argument("cyclic_point_report needs n >= 1");
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::size_t order = 1;
    for (unsigned i = 0; i < n; ++i)
        order *= p;
    auto g = catalog("C" + std::to_string(order), std::max(order, kDefaultOrderCap));
    auto classes = p_subgroup_classes(g, p);
    if (classes.size() != n + 1)
        throw std::logic_error("C_{p^n} should have n+1 p-subgroups");

    std::vector<PointStatus> out;
    for (const auto& cls : classes)
    {
        const auto ord = cls.representative.order();
        PointStatus s{ord == 1 ? "M(1)" : "M(C" + std::to_string(ord) + ")", true, ord, Verdict::Regular, ""};
        if (ord == 1)
            s.note = "modular fixed points at the trivial subgroup are the identity";
        else if (p == 2)
            s.note = "cyclic 2-group";
        else
        {
            s.verdict = Verdict::NotRegular;
            s.note = "contains C" + std::to_string(p) + " at an odd prime";
        }
        out.push_back(std::move(s));
    }
    for (unsigned i = 1; i <= n; ++i)
        out.push_back({"bottom(" + std::to_string(i) + ")", false, std::nullopt, Verdict::Regular,
                       "report row only: the stalk is a tt-field"});
    return out;
}

std::vector<CensusRow> census(const std::vector<std::string>& groups, const std::vector<unsigned>& primes,
                              std::size_t cap)
{
    std::vector<CensusRow> rows;
    for (const auto& d : groups)
        for (unsigned p : primes)
        {
            CensusRow row{d, p, std::nullopt, ""};
            try
            {
                auto g = catalog(d, cap);
                auto rep = classify(g, p);
                rep.group = d;
                row.report = std::move(rep);
            }
            catch (const std::exception& e)
            {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

} // namespace permtt
