#ifndef PERMTT_SPECTRUM_HPP
#define PERMTT_SPECTRUM_HPP

#include <vector>

#include "permtt/complexes.hpp"

namespace permtt
{

/// The closed point M(H) for a conjugacy class of p-subgroups.
struct ClosedPoint
{
    Subgroup representative;
    std::vector<Subgroup> conjugates;
    unsigned p;
};

/// One point per conjugacy class of p-subgroups, the trivial subgroup first.
std::vector<ClosedPoint> closed_points(const FiniteGroup& g, unsigned p);

/// x lies in M(H) iff Psi^H(x) is exact as a complex of vector spaces.
bool in_closed_ideal(const ClosedPoint& pt, const BoundedComplex& x);

/// Closed points whose ideal does not contain x.
std::vector<ClosedPoint> closed_support(const BoundedComplex& x, unsigned p);

} // namespace permtt

#endif
