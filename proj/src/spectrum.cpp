#include "permtt/spectrum.hpp"

#include <stdexcept>

#include "permtt/prime_field.hpp"

namespace permtt
{

std::vector<ClosedPoint> closed_points(const FiniteGroup& g, unsigned p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    std::vector<ClosedPoint> out;
    for (auto& cls : p_subgroup_classes(g, p))
        out.push_back({cls.representative, cls.members, p});
    return out;
}

bool in_closed_ideal(const ClosedPoint& pt, const BoundedComplex& x)
{
    // homology over k ignores the Weyl group action, so no restriction step is needed
    return homology(apply_functor(x, ModularFixedPoints(pt.representative, pt.p))).is_zero();
}

std::vector<ClosedPoint> closed_support(const BoundedComplex& x, unsigned p)
{
    std::vector<ClosedPoint> out;
    for (auto& pt : closed_points(x.group(), p))
        if (!in_closed_ideal(pt, x))
            out.push_back(std::move(pt));
    return out;
}

} // namespace permtt
