#include "permtt/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace permtt
{

BoundedComplex::BoundedComplex(FiniteGroup group, FieldSpec field, std::map<int, PermModule> terms,
                               std::map<int, FpMatrix> differentials)
    : group_(std::move(group)), field_(field), zero_(zero_module(group_, field))
{
    for (auto& [n, m] : terms)
    {
        if (!(m.group() == group_))
            throw std::invalid_argument("term " + std::to_string(n) + " is over a different group");
        if (m.field() != field_)
            throw FieldMismatch("term " + std::to_string(n) + " is over a different field");
        if (m.dimension() > 0)
            terms_.emplace(n, m);
    }
    for (auto& [n, d] : differentials)
    {
        const auto src = term(n).dimension(), tgt = term(n + 1).dimension();
        if (d.rows() != tgt || d.cols() != src)
            throw DimensionError("differential d^" + std::to_string(n) + " is " + std::to_string(d.rows()) + "x" +
                                 std::to_string(d.cols()) + ", expected " + std::to_string(tgt) + "x" +
                                 std::to_string(src));
        if (d.field() != field_)
            throw FieldMismatch("differential over a different field");
        if (src > 0 && tgt > 0)
            differentials_.emplace(n, d);
    }
}

BoundedComplex BoundedComplex::zero(const FiniteGroup& group, FieldSpec field) { return BoundedComplex(group, field, {}); }

BoundedComplex BoundedComplex::concentrated(const PermModule& m, int degree)
{
    return BoundedComplex(m.group(), m.field(), {{degree, m}});
}

PermModule BoundedComplex::term(int n) const
{
    auto it = terms_.find(n);
    return it == terms_.end() ? zero_ : it->second;
}

FpMatrix BoundedComplex::differential(int n) const
{
    auto it = differentials_.find(n);
    if (it != differentials_.end())
        return it->second;
    return FpMatrix(field_, term(n + 1).dimension(), term(n).dimension());
}

int BoundedComplex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int BoundedComplex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

BoundedComplex BoundedComplex::shift(int i) const
{
    std::map<int, PermModule> t;
    std::map<int, FpMatrix> d;
    for (const auto& [n, m] : terms_)
        t.emplace(n - i, m);
    for (const auto& [n, m] : differentials_)
        d.emplace(n - i, (i % 2 == 0) ? m : scale(m, field_.neg(1)));
    return BoundedComplex(group_, field_, std::move(t), std::move(d));
}

PeriodicComplex::PeriodicComplex(BoundedComplex window, int window_start, std::vector<PermModule> pattern_terms,
                                 std::vector<FpMatrix> pattern_maps, FpMatrix junction)
    : window_(std::move(window)), window_start_(window_start), pattern_terms_(std::move(pattern_terms)),
      pattern_maps_(std::move(pattern_maps))
{
    if (!window_.is_zero() && window_.min_degree() < window_start_)
        throw std::invalid_argument("window has terms below its start degree");
    if (!window_.is_zero() && window_.max_degree() > 0)
        throw std::invalid_argument("periodic complexes are supported in degrees <= 0");
    if (pattern_terms_.size() != pattern_maps_.size())
        throw std::invalid_argument("pattern needs one map per term");
    if (pattern_terms_.empty())
        return;
    const auto l = pattern_terms_.size();
    for (std::size_t j = 0; j < l; ++j)
    {
        const auto& src = pattern_terms_[j];
        const auto& tgt = pattern_terms_[(j + l - 1) % l];
        if (!(src.group() == group()) || src.field() != field())
            throw std::invalid_argument("pattern term over a different group or field");
        if (pattern_maps_[j].rows() != tgt.dimension() || pattern_maps_[j].cols() != src.dimension())
            throw DimensionError("pattern map " + std::to_string(j) + " has the wrong shape");
    }
    if (junction.rows() != window_.term(window_start_).dimension() || junction.cols() != pattern_terms_[0].dimension())
        throw DimensionError("junction has the wrong shape");
    junction_ = std::move(junction);
}

PeriodicComplex PeriodicComplex::bounded(BoundedComplex c)
{
    int start = c.min_degree();
    auto field = c.field();
    return PeriodicComplex(std::move(c), start, {}, {}, FpMatrix(field, 0, 0));
}

PermModule PeriodicComplex::term(int n) const
{
    if (n >= window_start_ || pattern_terms_.empty())
        return window_.term(n);
    auto m = static_cast<std::size_t>(window_start_ - 1 - n);
    return pattern_terms_[m % pattern_terms_.size()];
}

FpMatrix PeriodicComplex::differential(int n) const
{
    if (n >= window_start_ || pattern_terms_.empty())
        return n >= window_start_ ? window_.differential(n)
                                  : FpMatrix(field(), term(n + 1).dimension(), term(n).dimension());
    auto m = static_cast<std::size_t>(window_start_ - 1 - n);
    if (m == 0)
        return *junction_;
    return pattern_maps_[m % pattern_terms_.size()];
}

BoundedComplex PeriodicComplex::truncate(int lowest) const
{
    std::map<int, PermModule> t;
    std::map<int, FpMatrix> d;
    const int top = std::max(window_.max_degree(), 0);
    for (int n = lowest; n <= top; ++n)
    {
        t.emplace(n, term(n));
        if (n < top)
            d.emplace(n, differential(n));
    }
    return BoundedComplex(group(), field(), std::move(t), std::move(d));
}

int PeriodicComplex::analysis_floor() const
{
    if (pattern_terms_.empty())
        return window_.min_degree();
    return window_start_ - 2 * static_cast<int>(pattern_terms_.size()) - 1;
}

ValidationReport validate(const BoundedComplex& c)
{
    if (c.is_zero())
        return {};
    for (int n = c.min_degree() - 1; n <= c.max_degree(); ++n)
    {
        auto d = c.differential(n);
        if (!is_equivariant(c.term(n), c.term(n + 1), d))
            return {false, n, "differential d^" + std::to_string(n) + " is not equivariant"};
        if (!(c.differential(n + 1) * d).is_zero())
            return {false, n, "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0"};
    }
    return {};
}

ValidationReport validate(const PeriodicComplex& c)
{
    if (c.is_bounded())
        return validate(c.window());
    // two full periods below the junction cover every consecutive pair
    return validate(c.truncate(c.analysis_floor() - 1));
}

std::size_t HomologyTable::at(int n) const
{
    if (n > to_degree)
        return 0;
    if (n >= from_degree)
    {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    if (!tail)
        return 0;
    const auto l = static_cast<int>(tail->profile.size());
    return tail->profile[static_cast<std::size_t>(((tail->repeats_below - n) % l + l) % l)];
}

bool HomologyTable::is_zero() const { return dims.empty() && !tail_nonzero(); }

bool HomologyTable::tail_nonzero() const
{
    return tail && std::any_of(tail->profile.begin(), tail->profile.end(), [](auto v) { return v != 0; });
}

namespace
{
template <class Complex>
std::size_t homology_at(const Complex& c, int n)
{
    const auto dim = c.term(n).dimension();
    if (dim == 0)
        return 0;
    return dim - rank(c.differential(n)) - rank(c.differential(n - 1));
}
} // namespace

HomologyTable homology(const BoundedComplex& c)
{
    HomologyTable t;
    if (c.is_zero())
        return t;
    t.from_degree = c.min_degree();
    t.to_degree = c.max_degree();
    for (const auto& [n, m] : c.terms())
        if (auto h = homology_at(c, n))
            t.dims[n] = h;
    return t;
}

HomologyTable homology(const PeriodicComplex& c)
{
    if (c.is_bounded())
        return homology(c.window());
    HomologyTable t;
    t.from_degree = c.analysis_floor();
    t.to_degree = 0;
    for (int n = t.from_degree; n <= t.to_degree; ++n)
        if (auto h = homology_at(c, n))
            t.dims[n] = h;

    const int l = static_cast<int>(c.period());
    PeriodicTail tail;
    tail.repeats_below = c.window_start() - 2;
    for (int j = 0; j < l; ++j)
    {
        auto first = t.at(tail.repeats_below - j);
        auto second = t.at(tail.repeats_below - j - l);
        tail.profile.push_back(first);
        tail.consistent = tail.consistent && first == second;
    }
    t.tail = std::move(tail);
    return t;
}

PermModule CategoricalFixedPoints::on_module(const PermModule& m) const
{
    auto dim = m.basis().orbits_under(h_).size();
    std::vector<int> action(dim);
    for (std::size_t i = 0; i < dim; ++i)
        action[i] = static_cast<int>(i);
    return PermModule(m.field(), std::make_shared<GSet>(trivial_, dim, std::move(action)));
}

FpMatrix CategoricalFixedPoints::on_matrix(const PermModule& s, const PermModule& t, const FpMatrix& f) const
{
    auto src = fixed_points(s, h_);
    // coordinates of an H-fixed vector in the orbit-sum basis are its values
    // at the orbit representatives
    std::vector<std::size_t> reps;
    for (const auto& orbit : t.basis().orbits_under(h_))
        reps.push_back(static_cast<std::size_t>(orbit.front()));
    std::vector<std::size_t> all_cols(f.cols());
    for (std::size_t i = 0; i < all_cols.size(); ++i)
        all_cols[i] = i;
    return f.submatrix(reps, all_cols) * src.inclusion;
}

BoundedComplex apply_functor(const BoundedComplex& c, const DegreewiseFunctor& f)
{
    std::map<int, PermModule> terms;
    std::map<int, FpMatrix> diffs;
    for (const auto& [n, m] : c.terms())
        terms.emplace(n, f.on_module(m));
    for (const auto& [n, m] : c.terms())
        if (c.terms().count(n + 1))
            diffs.emplace(n, f.on_matrix(m, c.term(n + 1), c.differential(n)));
    BoundedComplex out(f.target_group(), c.field(), std::move(terms), std::move(diffs));
    auto report = validate(out);
    if (!report.valid)
        throw std::logic_error("functor image is not a valid complex: " + report.reason);
    return out;
}

PeriodicComplex apply_functor(const PeriodicComplex& c, const DegreewiseFunctor& f)
{
    auto window = apply_functor(c.window(), f);
    if (c.is_bounded())
        return PeriodicComplex::bounded(std::move(window));
    const auto l = c.period();
    std::vector<PermModule> terms;
    std::vector<FpMatrix> maps;
    for (std::size_t j = 0; j < l; ++j)
        terms.push_back(f.on_module(c.pattern_terms()[j]));
    for (std::size_t j = 0; j < l; ++j)
        maps.push_back(f.on_matrix(c.pattern_terms()[j], c.pattern_terms()[(j + l - 1) % l], c.pattern_maps()[j]));
    auto junction = f.on_matrix(c.pattern_terms()[0], c.window().term(c.window_start()), *c.junction());
    PeriodicComplex out(std::move(window), c.window_start(), std::move(terms), std::move(maps), std::move(junction));
    auto report = validate(out);
    if (!report.valid)
        throw std::logic_error("functor image is not a valid complex: " + report.reason);
    return out;
}

namespace
{
template <class Complex>
AcyclicityReport g_acyclic(const Complex& c)
{
    for (const auto& cls : conjugacy_classes_of_subgroups(c.group()))
    {
        auto table = homology(apply_functor(c, CategoricalFixedPoints(cls.representative)));
        if (table.is_zero())
            continue;
        AcyclicityReport r;
        r.acyclic = false;
        r.subgroup = cls.representative;
        r.degree = table.dims.empty() ? table.tail->repeats_below : table.dims.rbegin()->first;
        return r;
    }
    return {};
}
} // namespace

AcyclicityReport is_g_acyclic(const BoundedComplex& c) { return g_acyclic(c); }
AcyclicityReport is_g_acyclic(const PeriodicComplex& c) { return g_acyclic(c); }

std::size_t hom_from_generator(const Subgroup& k, int shift, const BoundedComplex& s)
{
    return homology(apply_functor(s, CategoricalFixedPoints(k))).at(-shift);
}

std::size_t hom_from_generator(const Subgroup& k, int shift, const PeriodicComplex& s)
{
    return homology(apply_functor(s, CategoricalFixedPoints(k))).at(-shift);
}

namespace
{
// One basis element of Hom^n(a, b): a map a^m -> b^{m+n}.
struct HomElement
{
    int m;
    FpMatrix map;
};

std::vector<HomElement> hom_basis(const BoundedComplex& a, const BoundedComplex& b, int n)
{
    std::vector<HomElement> out;
    for (const auto& [m, am] : a.terms())
    {
        auto bm = b.term(m + n);
        if (bm.dimension() == 0)
            continue;
        for (auto& basis : hom_space(am, bm))
            out.push_back({m, std::move(basis)});
    }
    return out;
}

// Rank of D^n : Hom^n -> Hom^{n+1}, with D(phi) = d_b phi - (-1)^n phi d_a.
std::size_t hom_differential_rank(const BoundedComplex& a, const BoundedComplex& b, int n)
{
    auto basis = hom_basis(a, b, n);
    if (basis.empty())
        return 0;
    const auto& f = a.field();
    // ambient coordinates of Hom^{n+1}: one flattened block per source degree
    std::map<int, std::size_t> offset;
    std::size_t total = 0;
    for (int m = a.min_degree() - 1; m <= a.max_degree(); ++m)
    {
        offset[m] = total;
        total += a.term(m).dimension() * b.term(m + n + 1).dimension();
    }
    const std::uint32_t sign = (n % 2 == 0) ? f.neg(1) : 1; // -(-1)^n
    std::vector<FpVector> columns;
    for (const auto& e : basis)
    {
        FpVector v(total, 0);
        auto put = [&](int m, const FpMatrix& block) {
            auto base = offset.at(m);
            for (std::size_t i = 0; i < block.entries().size(); ++i)
                v[base + i] = f.add(v[base + i], block.entries()[i]);
        };
        put(e.m, b.differential(e.m + n) * e.map);
        if (a.term(e.m - 1).dimension() > 0)
            put(e.m - 1, scale(e.map * a.differential(e.m - 1), sign));
        columns.push_back(std::move(v));
    }
    return rank(FpMatrix::from_columns(f, total, columns));
}
} // namespace

std::size_t hom_complex_dim(const BoundedComplex& a, const BoundedComplex& b, int i)
{
    if (!(a.group() == b.group()) || a.field() != b.field())
        throw std::invalid_argument("hom_complex_dim across different groups or fields");
    const auto dim = hom_basis(a, b, i).size();
    return dim - hom_differential_rank(a, b, i) - hom_differential_rank(a, b, i - 1);
}

BoundedComplex cone(const BoundedComplex& a, const BoundedComplex& b, const ChainMap& f)
{
    auto report = validate_chain_map(a, b, f);
    if (!report.valid)
        throw std::invalid_argument("cone of an invalid chain map: " + report.reason);
    const auto& field = a.field();
    auto component = [&](int n) {
        auto it = f.components.find(n);
        return it != f.components.end() ? it->second
                                        : FpMatrix(field, b.term(n).dimension(), a.term(n).dimension());
    };
    int lo = std::min(a.is_zero() ? b.min_degree() : a.min_degree() - 1, b.is_zero() ? a.min_degree() - 1 : b.min_degree());
    int hi = std::max(a.is_zero() ? b.max_degree() : a.max_degree() - 1, b.is_zero() ? a.max_degree() - 1 : b.max_degree());

    std::map<int, PermModule> terms;
    std::map<int, FpMatrix> diffs;
    for (int n = lo; n <= hi; ++n)
        terms.emplace(n, direct_sum({a.term(n + 1), b.term(n)}).module);
    for (int n = lo; n < hi; ++n)
    {
        const auto a1 = a.term(n + 1).dimension(), b0 = b.term(n).dimension();
        const auto a2 = a.term(n + 2).dimension(), b1 = b.term(n + 1).dimension();
        FpMatrix d(field, a2 + b1, a1 + b0);
        d.place(scale(a.differential(n + 1), field.neg(1)), 0, 0);
        d.place(component(n + 1), a2, 0);
        d.place(b.differential(n), a2, a1);
        diffs.emplace(n, std::move(d));
    }
    return BoundedComplex(a.group(), field, std::move(terms), std::move(diffs));
}

BoundedComplex tensor_with_module(const BoundedComplex& c, const PermModule& m)
{
    std::map<int, PermModule> terms;
    std::map<int, FpMatrix> diffs;
    auto id = FpMatrix::identity(m.field(), m.dimension());
    for (const auto& [n, t] : c.terms())
    {
        terms.emplace(n, tensor(t, m));
        if (c.terms().count(n + 1))
            diffs.emplace(n, kronecker(c.differential(n), id));
    }
    return BoundedComplex(c.group(), c.field(), std::move(terms), std::move(diffs));
}

BoundedComplex direct_sum(const BoundedComplex& a, const BoundedComplex& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const int lo = std::min(a.min_degree(), b.min_degree());
    const int hi = std::max(a.max_degree(), b.max_degree());
    std::map<int, PermModule> terms;
    std::map<int, FpMatrix> diffs;
    for (int n = lo; n <= hi; ++n)
        terms.emplace(n, direct_sum({a.term(n), b.term(n)}).module);
    for (int n = lo; n < hi; ++n)
    {
        FpMatrix d(a.field(), a.term(n + 1).dimension() + b.term(n + 1).dimension(),
                   a.term(n).dimension() + b.term(n).dimension());
        d.place(a.differential(n), 0, 0);
        d.place(b.differential(n), a.term(n + 1).dimension(), a.term(n).dimension());
        diffs.emplace(n, std::move(d));
    }
    return BoundedComplex(a.group(), a.field(), std::move(terms), std::move(diffs));
}

BoundedComplex random_complex(const FiniteGroup& g, FieldSpec field, std::mt19937_64& rng,
                              const RandomComplexOptions& options)
{
    auto subgroups = all_subgroups(g);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    const int length = uniform(options.min_length, options.max_length);
    const int top = uniform(-options.top_degree_spread, options.top_degree_spread);
    const int bottom = top - length + 1;

    std::map<int, PermModule> terms;
    for (int n = bottom; n <= top; ++n)
    {
        std::vector<PermModule> summands;
        const int count = uniform(1, options.max_summands);
        for (int s = 0; s < count; ++s)
            summands.push_back(coset_module(subgroups[static_cast<std::size_t>(uniform(0, static_cast<int>(subgroups.size()) - 1))], field));
        terms.emplace(n, direct_sum(summands).module);
    }

    std::map<int, FpMatrix> diffs;
    std::optional<FpMatrix> previous;
    for (int n = bottom; n < top; ++n)
    {
        const auto& src = terms.at(n);
        const auto& tgt = terms.at(n + 1);
        auto basis = hom_space(src, tgt);
        // coefficient vectors c with (sum c_j B_j) * previous = 0
        std::vector<FpVector> admissible;
        if (previous)
        {
            std::vector<FpVector> columns;
            for (const auto& b : basis)
                columns.push_back((b * *previous).entries());
            auto constraint = FpMatrix::from_columns(field, tgt.dimension() * previous->cols(), columns);
            admissible = kernel_basis(constraint);
        }
        else
        {
            for (std::size_t j = 0; j < basis.size(); ++j)
            {
                FpVector e(basis.size(), 0);
                e[j] = 1;
                admissible.push_back(std::move(e));
            }
        }
        FpMatrix d(field, tgt.dimension(), src.dimension());
        for (const auto& v : admissible)
        {
            auto weight = static_cast<std::uint32_t>(uniform(0, static_cast<int>(field.p()) - 1));
            if (weight == 0)
                continue;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (v[j] != 0)
                    d = d + scale(basis[j], field.mul(weight, v[j]));
        }
        previous = d;
        diffs.emplace(n, std::move(d));
    }
    return BoundedComplex(g, field, std::move(terms), std::move(diffs));
}

} // namespace permtt
