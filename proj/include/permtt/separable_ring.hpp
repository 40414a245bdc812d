#ifndef PERMTT_SEPARABLE_RING_HPP
#define PERMTT_SEPARABLE_RING_HPP

#include <string>
#include <vector>

#include "permtt/perm_module.hpp"

namespace permtt
{

/// The ring object A = k(G/H) with unit, multiplication and the section
/// gamma -> gamma (x) gamma. A (x) A uses the basis of tensor(A, A).
struct SeparableRingData
{
    Subgroup subgroup;
    PermModule ring;
    PermModule ring_squared;
    FpMatrix unit;     // dim A x 1, the sum of all cosets
    FpMatrix mult;     // dim A x dim A^2
    FpMatrix section;  // dim A^2 x dim A
};

SeparableRingData ring_structure(const Subgroup& h, FieldSpec field);

struct IdentityCheck
{
    std::string name;
    bool holds;
};

struct SeparabilityCertificate
{
    std::vector<IdentityCheck> checks;
    bool pass = false;
};

/// Equivariance of the structure maps plus: mu sigma = id;
/// (1 (x) mu)(sigma (x) 1) = sigma mu = (mu (x) 1)(1 (x) sigma); two-sided unit;
/// associativity; commutativity.
SeparabilityCertificate check_separability(const SeparableRingData& d);

} // namespace permtt

#endif
