#ifndef PERMTT_COMPLEX_TEXT_HPP
#define PERMTT_COMPLEX_TEXT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permtt/complexes.hpp"
#include "permtt/group_algebra.hpp"

namespace permtt
{

struct ComplexTextError : std::invalid_argument
{
    ComplexTextError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line(line)
    {
    }
    std::size_t line;
};

/// entries[row][col]: row indexes target summands, col indexes source summands.
using EntryTable = std::vector<std::vector<AugmentationPolynomial>>;

/// A complex of sums of coset modules whose differentials are given by
/// group-algebra entries. Realizing it checks every entry.
struct ComplexBlueprint
{
    FiniteGroup group;
    FieldSpec field;
    std::map<int, std::vector<Subgroup>> window; // degree -> summands; the lowest key is the window start
    std::map<int, EntryTable> window_maps;       // d^n for n, n+1 both in the window
    std::vector<std::vector<Subgroup>> pattern;  // empty for a bounded complex
    std::vector<EntryTable> pattern_maps;        // pattern_maps[j]: pattern[j] -> pattern[j-1 mod l]
    EntryTable junction;                         // pattern[0] -> window start
};

/// Throws IllDefinedEntry, DimensionError or std::invalid_argument.
PeriodicComplex realize(const ComplexBlueprint& b);

/// Subgroup token: 1, G, or <w1,w2,...> where each word is a product of
/// g<i> or g<i>^<e> over the defining generators, e.g. <g1g2>, <g1^2>.
Subgroup parse_subgroup_token(std::string_view token, const FiniteGroup& g);
std::string subgroup_token(const Subgroup& h);

/// Line format:
///
///   window:
///     0: G/G
///     -1: G/1
///     d-1: [[1]]
///   pattern:
///     G/<g1> + G/<g2> : [[x, 0], [0, y]]
///   junction: [[x, y]]
///
/// '#' starts a comment. A window term may be written as 0.
ComplexBlueprint parse_complex_text(std::string_view text, const FiniteGroup& g, FieldSpec field);
std::string format_complex_text(const ComplexBlueprint& b);

} // namespace permtt

#endif
