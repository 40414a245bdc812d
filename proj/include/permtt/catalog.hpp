#ifndef PERMTT_CATALOG_HPP
#define PERMTT_CATALOG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permtt/finite_group.hpp"

namespace permtt
{

/// Descriptor that does not parse. `position` is a 0-based character offset.
struct DescriptorError : std::invalid_argument
{
    DescriptorError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position(position)
    {
    }
    std::size_t position;
};

enum class FactorKind
{
    Cyclic,           // C<n>
    ElementaryAbelian,// E<p>^<r>
    Dihedral,         // D<n>, order 2n
    Quaternion,       // Q<n>, dicyclic of order n (generalised quaternion for n = 2^k)
    Symmetric,        // S<n>
    Alternating4      // A4
};

struct FactorSpec
{
    FactorKind kind;
    unsigned n = 0; // C, D, Q, S parameter; prime for E
    unsigned r = 0; // rank for E
};

/// Parsed form of a group descriptor: a direct product of factors.
struct GroupDescriptor
{
    std::vector<FactorSpec> factors;
    std::size_t order() const;
    /// Canonical spelling, e.g. "C2xQ8".
    std::string canonical() const;
};

/// Grammar: factor ("x" factor)*, factor one of C<n>, E<p>^<r>, D<n>, Q<n>,
/// S<n>, A4. Case-insensitive ASCII.
GroupDescriptor parse_descriptor(std::string_view text);

/// Builds the group. Direct products act on disjoint point sets and carry the
/// concatenated generator lists of their factors.
FiniteGroup build_group(const GroupDescriptor& d, std::size_t cap = kDefaultOrderCap);

FiniteGroup catalog(std::string_view descriptor, std::size_t cap = kDefaultOrderCap);

/// Fixed list of descriptors used by the exhaustive property suites, one per
/// line of the catalog, restricted to order <= max_order.
std::vector<std::string> catalog_descriptors(std::size_t max_order);
/// Catalog 2-groups up to the given order.
std::vector<std::string> catalog_two_groups(std::size_t max_order);

} // namespace permtt

#endif
