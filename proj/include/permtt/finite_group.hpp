#ifndef PERMTT_FINITE_GROUP_HPP
#define PERMTT_FINITE_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permtt
{

inline constexpr std::size_t kDefaultOrderCap = 64;

/// Raised when a group would exceed the configured order cap.
struct OrderCapExceeded : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Image of each point 0..degree-1.
using Permutation = std::vector<int>;

/// A finite permutation group with every element enumerated.
///
/// Elements are indexed 0..order-1 in breadth-first order from the identity.
/// mul(a, b) is the composite "apply b, then a". The handle is cheap to copy;
/// all data is shared and immutable.
class FiniteGroup
{
public:
    static FiniteGroup from_generators(int degree, std::vector<Permutation> generators,
                                       std::size_t cap = kDefaultOrderCap, std::string name = {});
    /// Keeps the given element order. The list must be closed under
    /// composition and `generator_indices` must generate it.
    static FiniteGroup from_elements(int degree, std::vector<Permutation> elements,
                                     std::vector<int> generator_indices, std::string name = {});
    static FiniteGroup trivial();

    std::size_t order() const noexcept;
    int degree() const noexcept;
    const std::string& name() const noexcept;

    const Permutation& element(int i) const;
    int mul(int a, int b) const noexcept;
    int inv(int a) const noexcept;
    int identity() const noexcept;
    /// Element indices of the defining generators, in the given order.
    const std::vector<int>& generators() const noexcept;
    /// Index of a permutation, or -1 when it is not in the group.
    int index_of(const Permutation& p) const;
    int element_order(int a) const;
    int power(int a, long e) const;
    bool is_abelian() const;

    /// Structural equality: same degree and same enumerated elements.
    bool operator==(const FiniteGroup& other) const;

    struct Data; // defined in finite_group.cpp

private:
    explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;

    friend const std::vector<std::vector<int>>& subgroup_lattice(const FiniteGroup&);
};

/// A subgroup, stored as a sorted list of element indices of its parent.
class Subgroup
{
public:
    /// Throws std::invalid_argument if `members` is not closed.
    Subgroup(FiniteGroup parent, std::vector<int> members);

    const FiniteGroup& parent() const noexcept { return parent_; }
    const std::vector<int>& members() const noexcept { return members_; }
    std::size_t order() const noexcept { return members_.size(); }
    bool contains(int g) const noexcept { return mask_[static_cast<std::size_t>(g)] != 0; }
    bool is_subset_of(const Subgroup& other) const;
    /// Position of a member in members(), or -1.
    int position(int g) const;

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }
    bool operator<(const Subgroup& o) const { return members_ < o.members_; }

private:
    FiniteGroup parent_;
    std::vector<int> members_;
    std::vector<char> mask_;
};

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<int>& generators);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// x^{-1} H x
Subgroup conjugate(const Subgroup& h, int x);

/// The subgroup as a group in its own right; element i is h.members()[i].
FiniteGroup as_group(const Subgroup& h);

/// Every subgroup, sorted by (order, members). Cached per group.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct SubgroupClass
{
    Subgroup representative;       // least members list in the class
    std::vector<Subgroup> members; // all conjugates, sorted
};

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& g,
                                                          std::optional<std::size_t> order_filter = std::nullopt);

bool is_p_power(std::size_t n, unsigned p);
bool is_p_subgroup(const Subgroup& h, unsigned p);
/// All p-subgroups, up to conjugacy, including the trivial one.
std::vector<SubgroupClass> p_subgroup_classes(const FiniteGroup& g, unsigned p);

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p);
bool is_cyclic(const Subgroup& h);
bool is_normal(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);
Subgroup frattini_subgroup(const FiniteGroup& g);
/// N_G(H, K) = { g : g^{-1} H g is contained in K }, as sorted element indices.
std::vector<int> transporter(const Subgroup& h, const Subgroup& k);
bool is_subconjugate(const Subgroup& h, const Subgroup& k);
/// Least common multiple of the element orders.
std::size_t exponent(const Subgroup& h);
std::size_t involution_count(const Subgroup& h);

/// G/N realised by the regular action on cosets.
struct QuotientGroup
{
    FiniteGroup parent;
    std::vector<int> normal;                // sorted element indices of N
    std::vector<std::vector<int>> cosets;   // cosets[i] sorted; ordered by least element
    std::vector<int> coset_of;              // parent element -> coset index = quotient element index
    FiniteGroup group;                      // element i acts as left multiplication by coset i
};

/// Throws std::invalid_argument when `n` is not normal.
QuotientGroup quotient(const Subgroup& n);

/// N_G(H)/H together with the map from N_G(H) into it.
struct WeylGroup
{
    Subgroup subgroup;      // H
    Subgroup normalizer;    // N_G(H)
    QuotientGroup quotient; // over as_group(normalizer)
    /// Quotient element of g in N_G(H); -1 when g does not normalise H.
    int image_of(int g) const;
};

WeylGroup weyl_group(const Subgroup& h);

enum class TwoGroupBranch
{
    Cyclic,
    ContainsKleinFour,
    ContainsQ8
};

struct TrichotomyResult
{
    TwoGroupBranch branch;
    Subgroup witness; // whole group, a Klein four subgroup, or a Q8 subgroup
};

std::string to_string(TwoGroupBranch b);

/// Throws std::invalid_argument when |G| is not a power of 2, and
/// std::logic_error if no branch applies.
TrichotomyResult two_group_trichotomy(const FiniteGroup& g);

bool is_klein_four(const Subgroup& h);
/// Order 8, non-cyclic, exactly one involution.
bool is_quaternion_eight(const Subgroup& h);

/// Compact text form, e.g. "{0,3,5}".
std::string describe(const Subgroup& h);

} // namespace permtt

#endif
