#ifndef PERMTT_RESIDUE_OBJECTS_HPP
#define PERMTT_RESIDUE_OBJECTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permtt/complex_text.hpp"

namespace permtt
{

/// A candidate for the residue object at the top closed point of a p-group G:
/// the complex S with zeta : 1[0] -> S and sigma : Psi^G(S) -> 1[0].
struct ResidueCandidate
{
    FiniteGroup group;
    FieldSpec field;
    ComplexBlueprint blueprint;
    PeriodicComplex s;
    ChainMap zeta;
    ChainMap sigma;
};

/// k -> kC2 -> k in degrees -2..0 (norm, then augmentation). Needs p = 2.
ComplexBlueprint blueprint_S_C2(const FiniteGroup& c2, FieldSpec field);
/// The periodic complex over C_p with window k, R, R+k and pattern (g, f). Needs p odd.
ComplexBlueprint blueprint_S_Cp(const FiniteGroup& cp, FieldSpec field);
/// The periodic complex over C2 x C2 with junction h and pattern (f, g). Needs p = 2.
ComplexBlueprint blueprint_S_klein(const FiniteGroup& e, FieldSpec field);

/// Realizes a blueprint and attaches the standard zeta (the identity of k in
/// degree 0) and sigma (projection of Psi^G(S) onto its degree-0 term).
ResidueCandidate make_candidate(ComplexBlueprint blueprint);

ResidueCandidate build_S_C2(FieldSpec field);
ResidueCandidate build_S_Cp(unsigned p);
ResidueCandidate build_S_klein(FieldSpec field);

/// Picks the builder matching the group: C2, C_p for odd p, or C2 x C2.
/// Throws std::invalid_argument for any other group or a mismatched prime.
ResidueCandidate build_residue_for(const FiniteGroup& g, unsigned p);

struct HomCell
{
    Subgroup subgroup; // conjugacy class representative K
    int shift;         // i in Hom(k(G/K)[i], S)
    std::size_t dimension;
    std::size_t expected;
};

enum class Compactness
{
    Compact,
    NotCompact,
    Inconclusive
};
std::string to_string(Compactness c);

struct CompactnessCertificate
{
    Compactness verdict = Compactness::Inconclusive;
    std::string reason;
    std::optional<HomologyTable> psi_homology; // homology of Psi^G(S) when computed
};

struct DegreeWindow
{
    int lowest_shift;
    int highest_shift;
};

/// Shifts i whose degrees -i cover [w - 2l, 2], with w the window start and l
/// the period; for bounded S, the support of S widened by 2 on both sides.
DegreeWindow default_degree_window(const PeriodicComplex& s);

struct ResidueCertificate
{
    ValidationReport complex_check;
    ValidationReport zeta_check;
    ValidationReport sigma_check;
    std::vector<HomCell> hom_table;
    bool hom_conditions = false;
    std::optional<std::uint32_t> section_scalar; // sigma o Psi^G(zeta) in degree 0
    bool zeta_not_null_homotopic = false;
    CompactnessCertificate compactness;
    std::vector<std::string> failures;
    bool pass = false;
};

/// Never throws on a bad candidate: every failed condition is recorded.
ResidueCertificate kappa_conditions_check(const ResidueCandidate& c, std::optional<DegreeWindow> window = std::nullopt);

/// Compact when S is bounded, NotCompact when Psi^G(S) has a nonzero
/// periodic homology tail, Inconclusive otherwise.
CompactnessCertificate compactness_certificate(const ResidueCandidate& c);

} // namespace permtt

#endif
