#ifndef PERMTT_PERM_MODULE_HPP
#define PERMTT_PERM_MODULE_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "permtt/finite_group.hpp"
#include "permtt/prime_field.hpp"

namespace permtt
{

/// Raised when a matrix does not commute with the group action.
struct NotEquivariant : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// Raised when Psi^H is requested for a subgroup that is not a p-group.
struct NotPSubgroup : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// A finite G-set with points 0..size-1.
class GSet
{
public:
    /// `action[g * size + x]` is g.x. The table is checked to be an action.
    GSet(FiniteGroup group, std::size_t size, std::vector<int> action);

    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t size() const noexcept { return size_; }
    int act(int g, int x) const noexcept
    {
        return action_[static_cast<std::size_t>(g) * size_ + static_cast<std::size_t>(x)];
    }
    const std::vector<int>& table() const noexcept { return action_; }

    struct Orbit
    {
        int representative;       // least point of the orbit
        std::vector<int> points;  // sorted
        Subgroup stabilizer;      // of the representative
    };
    std::vector<Orbit> orbits() const;
    /// Orbits of the restricted action of a subgroup, each sorted, ordered by least point.
    std::vector<std::vector<int>> orbits_under(const Subgroup& h) const;

private:
    FiniteGroup group_;
    std::size_t size_;
    std::vector<int> action_;
};

/// A permutation kG-module k(X). Copies share the underlying G-set.
class PermModule
{
public:
    PermModule(FieldSpec field, std::shared_ptr<const GSet> basis);

    const FieldSpec& field() const noexcept { return field_; }
    const GSet& basis() const noexcept { return *basis_; }
    const FiniteGroup& group() const noexcept { return basis_->group(); }
    std::size_t dimension() const noexcept { return basis_->size(); }
    int act(int g, int x) const noexcept { return basis_->act(g, x); }

    /// Permutation matrix of g: e_x -> e_{g.x}.
    FpMatrix representation(int g) const;

private:
    FieldSpec field_;
    std::shared_ptr<const GSet> basis_;
};

/// k-linear map between permutation modules, checked to be equivariant on
/// the generators at construction.
class ModuleMap
{
public:
    ModuleMap(PermModule source, PermModule target, FpMatrix matrix);

    const PermModule& source() const noexcept { return source_; }
    const PermModule& target() const noexcept { return target_; }
    const FpMatrix& matrix() const noexcept { return matrix_; }

    /// Re-checks equivariance against every group element.
    bool equivariant_on_all_elements() const;

private:
    PermModule source_;
    PermModule target_;
    FpMatrix matrix_;
};

/// True iff A[y][x] == A[g.y][g.x] for every generator g (every element if `all`).
bool is_equivariant(const PermModule& source, const PermModule& target, const FpMatrix& a, bool all = false);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const PermModule& m);
ModuleMap zero_map(const PermModule& source, const PermModule& target);

PermModule zero_module(const FiniteGroup& g, FieldSpec field);
/// k(G/G), the tensor unit.
PermModule unit_module(const FiniteGroup& g, FieldSpec field);

/// k(G/K) with left cosets ordered by least element; gK.x means coset of g*x.
PermModule coset_module(const Subgroup& k, FieldSpec field);
/// Coset of each element under coset_module(k): coset_index[g] for gK.
std::vector<int> coset_index(const Subgroup& k);

struct DirectSum
{
    PermModule module;
    std::vector<std::size_t> offsets; // first basis index of each summand
};
DirectSum direct_sum(const std::vector<PermModule>& summands);

/// Points of m (x) n are pairs (i, j) at index i * dim(n) + j, with diagonal action.
PermModule tensor(const PermModule& m, const PermModule& n);

struct FixedPoints
{
    std::size_t dimension;
    FpMatrix inclusion;                 // dim(m) x dimension; columns are orbit sums
    std::vector<std::vector<int>> orbits;
};
FixedPoints fixed_points(const PermModule& m, const Subgroup& h);

/// Psi^H(M) = k(X^H), a module over the Weyl group N_G(H)/H.
struct BrauerImage
{
    PermModule module;
    std::vector<int> section; // points of X fixed by H, in basis order of `module`
};

/// Degreewise data for Psi^H on one group: computes the Weyl group once.
class BrauerQuotient
{
public:
    /// Throws NotPSubgroup unless |H| is a power of p.
    BrauerQuotient(Subgroup h, unsigned p);

    const Subgroup& subgroup() const noexcept { return weyl_.subgroup; }
    const WeylGroup& weyl() const noexcept { return weyl_; }
    const FiniteGroup& weyl_group() const noexcept { return weyl_.quotient.group; }

    BrauerImage on_module(const PermModule& m) const;
    /// Submatrix of f on H-fixed basis points of source and target.
    FpMatrix on_matrix(const PermModule& source, const PermModule& target, const FpMatrix& f) const;
    ModuleMap on_map(const ModuleMap& f) const;

private:
    WeylGroup weyl_;
};

BrauerImage brauer(const PermModule& m, const Subgroup& h);
ModuleMap brauer_on_map(const ModuleMap& f, const Subgroup& h);

/// Restriction along H <= G; the result is a module over as_group(h).
PermModule restrict(const PermModule& m, const Subgroup& h);
/// Inflation of a module over q.group to q.parent.
PermModule inflate(const PermModule& m, const QuotientGroup& q);
/// Ind_H^G k(H/K) = k(G/K) for K <= H <= G.
PermModule induce_coset(const Subgroup& h, const Subgroup& k, FieldSpec field);

/// Basis of Hom_kG(m, n): indicator matrices of G-orbits on pairs (y, x).
std::vector<FpMatrix> hom_space(const PermModule& m, const PermModule& n);

} // namespace permtt

#endif
