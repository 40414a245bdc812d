#ifndef PERMTT_COMPLEXES_HPP
#define PERMTT_COMPLEXES_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permtt/perm_module.hpp"

namespace permtt
{

/// Cochain complex of permutation modules with finitely many nonzero terms.
///
/// Cohomological grading: d^n maps term(n) to term(n+1). A module placed by
/// the shift [i] sits in degree -i.
class BoundedComplex
{
public:
    /// Missing differentials are zero. Shapes are checked here; d^2 = 0 and
    /// equivariance are left to validate().
    BoundedComplex(FiniteGroup group, FieldSpec field, std::map<int, PermModule> terms,
                   std::map<int, FpMatrix> differentials = {});

    static BoundedComplex zero(const FiniteGroup& group, FieldSpec field);
    /// M[-degree]: the one-term complex with M in `degree`.
    static BoundedComplex concentrated(const PermModule& m, int degree);

    const FiniteGroup& group() const noexcept { return group_; }
    const FieldSpec& field() const noexcept { return field_; }

    PermModule term(int n) const;
    FpMatrix differential(int n) const;
    const std::map<int, PermModule>& terms() const noexcept { return terms_; }

    /// True when every term is zero.
    bool is_zero() const noexcept { return terms_.empty(); }
    int min_degree() const; // 0 for the zero complex
    int max_degree() const;

    /// X[i]: term(n) of the result is term(n + i) of X, with d multiplied by (-1)^i.
    BoundedComplex shift(int i) const;

private:
    FiniteGroup group_;
    FieldSpec field_;
    std::map<int, PermModule> terms_;        // nonzero terms only
    std::map<int, FpMatrix> differentials_;  // only between stored terms
    PermModule zero_;
};

/// A complex supported in degrees <= 0 that repeats a fixed pattern towards
/// minus infinity.
///
/// Degrees >= w come from `window` (w = window_start). Degree w-1-m, m >= 0,
/// holds pattern_terms[m mod l]. Its differential is `junction` for m = 0 and
/// pattern_maps[m mod l] otherwise, where pattern_maps[j] maps pattern term j
/// to pattern term j-1 (mod l). An empty pattern gives a bounded complex.
class PeriodicComplex
{
public:
    PeriodicComplex(BoundedComplex window, int window_start, std::vector<PermModule> pattern_terms,
                    std::vector<FpMatrix> pattern_maps, FpMatrix junction);
    static PeriodicComplex bounded(BoundedComplex c);

    const FiniteGroup& group() const noexcept { return window_.group(); }
    const FieldSpec& field() const noexcept { return window_.field(); }
    bool is_bounded() const noexcept { return pattern_terms_.empty(); }
    int window_start() const noexcept { return window_start_; }
    std::size_t period() const noexcept { return pattern_terms_.size(); }

    const BoundedComplex& window() const noexcept { return window_; }
    const std::vector<PermModule>& pattern_terms() const noexcept { return pattern_terms_; }
    const std::vector<FpMatrix>& pattern_maps() const noexcept { return pattern_maps_; }
    const std::optional<FpMatrix>& junction() const noexcept { return junction_; }

    PermModule term(int n) const;
    FpMatrix differential(int n) const;
    /// Brutal truncation keeping degrees >= lowest.
    BoundedComplex truncate(int lowest) const;
    /// Lowest degree whose homology is computed: one junction copy plus two
    /// full periods below the window.
    int analysis_floor() const;
    int max_degree() const { return window_.max_degree(); }

private:
    BoundedComplex window_;
    int window_start_;
    std::vector<PermModule> pattern_terms_;
    std::vector<FpMatrix> pattern_maps_;
    std::optional<FpMatrix> junction_;
};

struct ValidationReport
{
    bool valid = true;
    std::optional<int> degree; // first offending degree
    std::string reason;
};

ValidationReport validate(const BoundedComplex& c);
/// Checks the window, the junction, the pattern interior and the wraparound.
ValidationReport validate(const PeriodicComplex& c);

struct PeriodicTail
{
    int repeats_below;                  // profile[j] is the dimension at repeats_below - j
    std::vector<std::size_t> profile;   // one entry per pattern position
    bool consistent = true;             // the two computed periods agree
};

struct HomologyTable
{
    int from_degree = 0;
    int to_degree = -1;
    std::map<int, std::size_t> dims; // nonzero entries only
    std::optional<PeriodicTail> tail;

    /// Dimension at n; folds degrees below the computed range into the tail.
    std::size_t at(int n) const;
    bool is_zero() const;
    bool tail_nonzero() const;
};

HomologyTable homology(const BoundedComplex& c);
HomologyTable homology(const PeriodicComplex& c);

/// A functor applied termwise to complexes.
class DegreewiseFunctor
{
public:
    virtual ~DegreewiseFunctor() = default;
    virtual const FiniteGroup& target_group() const = 0;
    virtual PermModule on_module(const PermModule& m) const = 0;
    virtual FpMatrix on_matrix(const PermModule& source, const PermModule& target, const FpMatrix& f) const = 0;
};

/// Psi^H: modular fixed points, landing over N_G(H)/H.
class ModularFixedPoints final : public DegreewiseFunctor
{
public:
    ModularFixedPoints(const Subgroup& h, unsigned p) : brauer_(h, p) {}
    const FiniteGroup& target_group() const override { return brauer_.weyl_group(); }
    PermModule on_module(const PermModule& m) const override { return brauer_.on_module(m).module; }
    FpMatrix on_matrix(const PermModule& s, const PermModule& t, const FpMatrix& f) const override
    {
        return brauer_.on_matrix(s, t, f);
    }

private:
    BrauerQuotient brauer_;
};

/// Categorical fixed points (-)^H as complexes of k-vector spaces (modules
/// over the trivial group), in the orbit-sum basis.
class CategoricalFixedPoints final : public DegreewiseFunctor
{
public:
    explicit CategoricalFixedPoints(Subgroup h) : h_(std::move(h)), trivial_(FiniteGroup::trivial()) {}
    const FiniteGroup& target_group() const override { return trivial_; }
    PermModule on_module(const PermModule& m) const override;
    FpMatrix on_matrix(const PermModule& s, const PermModule& t, const FpMatrix& f) const override;

private:
    Subgroup h_;
    FiniteGroup trivial_;
};

class Restriction final : public DegreewiseFunctor
{
public:
    explicit Restriction(Subgroup h) : h_(std::move(h)), group_(as_group(h_)) {}
    const FiniteGroup& target_group() const override { return group_; }
    PermModule on_module(const PermModule& m) const override { return restrict(m, h_); }
    FpMatrix on_matrix(const PermModule&, const PermModule&, const FpMatrix& f) const override { return f; }

private:
    Subgroup h_;
    FiniteGroup group_;
};

class Inflation final : public DegreewiseFunctor
{
public:
    explicit Inflation(QuotientGroup q) : q_(std::move(q)) {}
    const FiniteGroup& target_group() const override { return q_.parent; }
    PermModule on_module(const PermModule& m) const override { return inflate(m, q_); }
    FpMatrix on_matrix(const PermModule&, const PermModule&, const FpMatrix& f) const override { return f; }

private:
    QuotientGroup q_;
};

/// Termwise image; throws std::logic_error if the image fails validation.
BoundedComplex apply_functor(const BoundedComplex& c, const DegreewiseFunctor& f);
PeriodicComplex apply_functor(const PeriodicComplex& c, const DegreewiseFunctor& f);

struct AcyclicityReport
{
    bool acyclic = true;
    std::optional<Subgroup> subgroup; // witness: a subgroup with non-exact fixed points
    std::optional<int> degree;        // and a degree of nonzero homology there
};

/// Zero in DPerm: every fixed-point complex c^H is exact (H up to conjugacy).
AcyclicityReport is_g_acyclic(const BoundedComplex& c);
AcyclicityReport is_g_acyclic(const PeriodicComplex& c);

/// dim Hom_K(k(G/K)[i], S) = dim H^{-i}(S^K).
std::size_t hom_from_generator(const Subgroup& k, int shift, const BoundedComplex& s);
std::size_t hom_from_generator(const Subgroup& k, int shift, const PeriodicComplex& s);

/// Dimension of degree-i chain maps a -> b modulo null-homotopic ones,
/// computed as H^i of the Hom complex.
std::size_t hom_complex_dim(const BoundedComplex& a, const BoundedComplex& b, int i);

/// Degree-0 chain map; components[n] : source^n -> target^n, absent means zero.
struct ChainMap
{
    std::map<int, FpMatrix> components;
};

template <class Source, class Target>
ValidationReport validate_chain_map(const Source& source, const Target& target, const ChainMap& f)
{
    if (f.components.empty())
        return {};
    const int lo = f.components.begin()->first - 1;
    const int hi = f.components.rbegin()->first;
    auto component = [&](int n) {
        auto it = f.components.find(n);
        if (it != f.components.end())
            return it->second;
        return FpMatrix(source.field(), target.term(n).dimension(), source.term(n).dimension());
    };
    for (const auto& [n, m] : f.components)
    {
        auto s = source.term(n), t = target.term(n);
        if (m.rows() != t.dimension() || m.cols() != s.dimension())
            return {false, n, "component has the wrong shape"};
        if (!is_equivariant(s, t, m))
            return {false, n, "component is not equivariant"};
    }
    for (int n = lo; n <= hi; ++n)
    {
        // d_T f^n = f^{n+1} d_S
        if (!(target.differential(n) * component(n) == component(n + 1) * source.differential(n)))
            return {false, n, "does not commute with the differentials"};
    }
    return {};
}

/// Standard mapping cone: cone^n = A^{n+1} (+) B^n, d = [[-d_A, 0], [f, d_B]].
BoundedComplex cone(const BoundedComplex& a, const BoundedComplex& b, const ChainMap& f);

/// Termwise X^n (x) M with differential d_X (x) id, basis as in tensor(X^n, M).
BoundedComplex tensor_with_module(const BoundedComplex& c, const PermModule& m);

/// Sum of complexes, termwise direct sum with block-diagonal differentials.
BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b);

struct RandomComplexOptions
{
    int min_length = 2;
    int max_length = 4;
    int max_summands = 2;
    int top_degree_spread = 2; // top degree drawn from [-spread, spread]
};

/// Random bounded complex with d^2 = 0 by construction: each differential is
/// drawn from the equivariant maps that kill the image of the previous one.
BoundedComplex random_complex(const FiniteGroup& g, FieldSpec field, std::mt19937_64& rng,
                              const RandomComplexOptions& options = {});

} // namespace permtt

#endif
