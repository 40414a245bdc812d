#include "permtt/perm_module.hpp"

#include <algorithm>
#include <map>

namespace permtt
{

GSet::GSet(FiniteGroup group, std::size_t size, std::vector<int> action)
    : group_(std::move(group)), size_(size), action_(std::move(action))
{
    const auto order = group_.order();
    if (action_.size() != order * size_)
        throw std::invalid_argument("G-set action table has wrong size");
    for (int g = 0; g < static_cast<int>(order); ++g)
    {
        std::vector<char> seen(size_, 0);
        for (std::size_t x = 0; x < size_; ++x)
        {
            int y = act(g, static_cast<int>(x));
            if (y < 0 || static_cast<std::size_t>(y) >= size_ || seen[static_cast<std::size_t>(y)])
                throw std::invalid_argument("G-set action is not a permutation");
            seen[static_cast<std::size_t>(y)] = 1;
        }
    }
    for (std::size_t x = 0; x < size_; ++x)
        if (act(group_.identity(), static_cast<int>(x)) != static_cast<int>(x))
            throw std::invalid_argument("identity does not act trivially");
    for (int a : group_.generators())
        for (int b = 0; b < static_cast<int>(order); ++b)
            for (std::size_t x = 0; x < size_; ++x)
                if (act(group_.mul(a, b), static_cast<int>(x)) != act(a, act(b, static_cast<int>(x))))
                    throw std::invalid_argument("G-set action is not compatible with the group law");
}

std::vector<GSet::Orbit> GSet::orbits() const
{
    std::vector<Orbit> out;
    for (const auto& pts : orbits_under(whole_group(group_)))
    {
        int rep = pts.front();
        std::vector<int> stab;
        for (int g = 0; g < static_cast<int>(group_.order()); ++g)
            if (act(g, rep) == rep)
                stab.push_back(g);
        out.push_back(Orbit{rep, pts, Subgroup(group_, std::move(stab))});
    }
    return out;
}

std::vector<std::vector<int>> GSet::orbits_under(const Subgroup& h) const
{
    std::vector<int> label(size_, -1);
    std::vector<std::vector<int>> out;
    for (std::size_t x = 0; x < size_; ++x)
    {
        if (label[x] >= 0)
            continue;
        std::vector<int> orbit;
        for (int m : h.members())
        {
            int y = act(m, static_cast<int>(x));
            if (label[static_cast<std::size_t>(y)] < 0)
            {
                label[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

PermModule::PermModule(FieldSpec field, std::shared_ptr<const GSet> basis) : field_(field), basis_(std::move(basis))
{
    if (!basis_)
        throw std::invalid_argument("null G-set");
}

FpMatrix PermModule::representation(int g) const
{
    FpMatrix r(field_, dimension(), dimension());
    for (std::size_t x = 0; x < dimension(); ++x)
        r(static_cast<std::size_t>(act(g, static_cast<int>(x))), x) = 1;
    return r;
}

bool is_equivariant(const PermModule& source, const PermModule& target, const FpMatrix& a, bool all)
{
    if (!(source.group() == target.group()))
        throw std::invalid_argument("equivariance check across different groups");
    if (a.rows() != target.dimension() || a.cols() != source.dimension())
        throw DimensionError("map matrix shape does not match its modules");
    std::vector<int> elements;
    if (all)
        for (int g = 0; g < static_cast<int>(source.group().order()); ++g)
            elements.push_back(g);
    else
        elements = source.group().generators();
    for (int g : elements)
        for (std::size_t y = 0; y < a.rows(); ++y)
            for (std::size_t x = 0; x < a.cols(); ++x)
                if (a(y, x) != a(static_cast<std::size_t>(target.act(g, static_cast<int>(y))),
                                 static_cast<std::size_t>(source.act(g, static_cast<int>(x)))))
                    return false;
    return true;
}

ModuleMap::ModuleMap(PermModule source, PermModule target, FpMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (source_.field() != target_.field() || matrix_.field() != source_.field())
        throw FieldMismatch("module map over mismatched fields");
    if (!is_equivariant(source_, target_, matrix_))
        throw NotEquivariant("matrix " + to_string(matrix_) + " is not G-equivariant");
}

bool ModuleMap::equivariant_on_all_elements() const { return is_equivariant(source_, target_, matrix_, true); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    return ModuleMap(f.source(), g.target(), g.matrix() * f.matrix());
}

ModuleMap identity_map(const PermModule& m)
{
    return ModuleMap(m, m, FpMatrix::identity(m.field(), m.dimension()));
}

ModuleMap zero_map(const PermModule& source, const PermModule& target)
{
    return ModuleMap(source, target, FpMatrix(source.field(), target.dimension(), source.dimension()));
}

PermModule zero_module(const FiniteGroup& g, FieldSpec field)
{
    return PermModule(field, std::make_shared<GSet>(g, 0, std::vector<int>{}));
}

PermModule unit_module(const FiniteGroup& g, FieldSpec field) { return coset_module(whole_group(g), field); }

std::vector<int> coset_index(const Subgroup& k)
{
    const auto& g = k.parent();
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
    {
        if (index[static_cast<std::size_t>(x)] >= 0)
            continue;
        for (int m : k.members())
            index[static_cast<std::size_t>(g.mul(x, m))] = next;
        ++next;
    }
    return index;
}

PermModule coset_module(const Subgroup& k, FieldSpec field)
{
    const auto& g = k.parent();
    auto index = coset_index(k);
    const std::size_t count = g.order() / k.order();
    std::vector<int> rep(count, -1);
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
        if (rep[static_cast<std::size_t>(index[static_cast<std::size_t>(x)])] < 0)
            rep[static_cast<std::size_t>(index[static_cast<std::size_t>(x)])] = x;

    std::vector<int> action(g.order() * count);
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
        for (std::size_t c = 0; c < count; ++c)
            action[static_cast<std::size_t>(a) * count + c] = index[static_cast<std::size_t>(g.mul(a, rep[c]))];
    return PermModule(field, std::make_shared<GSet>(g, count, std::move(action)));
}

DirectSum direct_sum(const std::vector<PermModule>& summands)
{
    if (summands.empty())
        throw std::invalid_argument("direct_sum needs at least one summand to fix the group");
    const auto& g = summands.front().group();
    const auto field = summands.front().field();
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& s : summands)
    {
        if (!(s.group() == g) || s.field() != field)
            throw std::invalid_argument("direct_sum of modules over different groups or fields");
        offsets.push_back(total);
        total += s.dimension();
    }
    std::vector<int> action(g.order() * total);
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
        for (std::size_t i = 0; i < summands.size(); ++i)
            for (std::size_t x = 0; x < summands[i].dimension(); ++x)
                action[static_cast<std::size_t>(a) * total + offsets[i] + x] =
                    static_cast<int>(offsets[i]) + summands[i].act(a, static_cast<int>(x));
    return DirectSum{PermModule(field, std::make_shared<GSet>(g, total, std::move(action))), std::move(offsets)};
}

PermModule tensor(const PermModule& m, const PermModule& n)
{
    if (!(m.group() == n.group()))
        throw std::invalid_argument("tensor of modules over different groups");
    if (m.field() != n.field())
        throw FieldMismatch("tensor of modules over different fields");
    const auto& g = m.group();
    const auto dm = m.dimension(), dn = n.dimension();
    std::vector<int> action(g.order() * dm * dn);
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j)
                action[static_cast<std::size_t>(a) * dm * dn + i * dn + j] =
                    m.act(a, static_cast<int>(i)) * static_cast<int>(dn) + n.act(a, static_cast<int>(j));
    return PermModule(m.field(), std::make_shared<GSet>(g, dm * dn, std::move(action)));
}

FixedPoints fixed_points(const PermModule& m, const Subgroup& h)
{
    if (!(h.parent() == m.group()))
        throw std::invalid_argument("fixed_points: subgroup of a different group");
    auto orbits = m.basis().orbits_under(h);
    FpMatrix inclusion(m.field(), m.dimension(), orbits.size());
    for (std::size_t o = 0; o < orbits.size(); ++o)
        for (int x : orbits[o])
            inclusion(static_cast<std::size_t>(x), o) = 1;
    return FixedPoints{orbits.size(), std::move(inclusion), std::move(orbits)};
}

BrauerQuotient::BrauerQuotient(Subgroup h, unsigned p) : weyl_(permtt::weyl_group(h))
{
    if (!is_p_subgroup(weyl_.subgroup, p))
        throw NotPSubgroup("modular fixed points need a " + std::to_string(p) + "-subgroup; got order " +
                           std::to_string(weyl_.subgroup.order()));
}

namespace
{
std::vector<int> fixed_basis_points(const PermModule& m, const Subgroup& h)
{
    std::vector<int> pts;
    for (std::size_t x = 0; x < m.dimension(); ++x)
    {
        bool fixed = std::all_of(h.members().begin(), h.members().end(),
                                 [&](int g) { return m.act(g, static_cast<int>(x)) == static_cast<int>(x); });
        if (fixed)
            pts.push_back(static_cast<int>(x));
    }
    return pts;
}
} // namespace

BrauerImage BrauerQuotient::on_module(const PermModule& m) const
{
    const auto& h = weyl_.subgroup;
    if (!(m.group() == h.parent()))
        throw std::invalid_argument("Psi^H applied to a module over a different group");
    auto pts = fixed_basis_points(m, h);
    std::map<int, int> local;
    for (std::size_t i = 0; i < pts.size(); ++i)
        local[pts[i]] = static_cast<int>(i);

    const auto& w = weyl_.quotient.group;
    const auto& q = weyl_.quotient;
    std::vector<int> action(w.order() * pts.size());
    for (std::size_t e = 0; e < w.order(); ++e)
    {
        // any lift of the coset to N_G(H) acts the same way on H-fixed points
        int lift = weyl_.normalizer.members()[static_cast<std::size_t>(q.cosets[e].front())];
        for (std::size_t i = 0; i < pts.size(); ++i)
            action[e * pts.size() + i] = local.at(m.act(lift, pts[i]));
    }
    return BrauerImage{PermModule(m.field(), std::make_shared<GSet>(w, pts.size(), std::move(action))),
                       std::move(pts)};
}

FpMatrix BrauerQuotient::on_matrix(const PermModule& source, const PermModule& target, const FpMatrix& f) const
{
    auto src = fixed_basis_points(source, weyl_.subgroup);
    auto tgt = fixed_basis_points(target, weyl_.subgroup);
    std::vector<std::size_t> rows(tgt.begin(), tgt.end()), cols(src.begin(), src.end());
    return f.submatrix(rows, cols);
}

ModuleMap BrauerQuotient::on_map(const ModuleMap& f) const
{
    if (!is_equivariant(f.source(), f.target(), f.matrix(), true))
        throw NotEquivariant("Psi^H of a non-equivariant map");
    return ModuleMap(on_module(f.source()).module, on_module(f.target()).module,
                     on_matrix(f.source(), f.target(), f.matrix()));
}

BrauerImage brauer(const PermModule& m, const Subgroup& h)
{
    return BrauerQuotient(h, m.field().p()).on_module(m);
}

ModuleMap brauer_on_map(const ModuleMap& f, const Subgroup& h)
{
    return BrauerQuotient(h, f.source().field().p()).on_map(f);
}

PermModule restrict(const PermModule& m, const Subgroup& h)
{
    if (!(h.parent() == m.group()))
        throw std::invalid_argument("restrict: subgroup of a different group");
    auto hg = as_group(h);
    const auto n = m.dimension();
    std::vector<int> action(hg.order() * n);
    for (std::size_t i = 0; i < h.members().size(); ++i)
        for (std::size_t x = 0; x < n; ++x)
            action[i * n + x] = m.act(h.members()[i], static_cast<int>(x));
    return PermModule(m.field(), std::make_shared<GSet>(hg, n, std::move(action)));
}

PermModule inflate(const PermModule& m, const QuotientGroup& q)
{
    if (!(m.group() == q.group))
        throw std::invalid_argument("inflate: module is not over the quotient group");
    const auto& g = q.parent;
    const auto n = m.dimension();
    std::vector<int> action(g.order() * n);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t x = 0; x < n; ++x)
            action[a * n + x] = m.act(q.coset_of[a], static_cast<int>(x));
    return PermModule(m.field(), std::make_shared<GSet>(g, n, std::move(action)));
}

PermModule induce_coset(const Subgroup& h, const Subgroup& k, FieldSpec field)
{
    if (!(h.parent() == k.parent()) || !k.is_subset_of(h))
        throw std::invalid_argument("induce_coset needs K <= H <= G");
    return coset_module(k, field);
}

std::vector<FpMatrix> hom_space(const PermModule& m, const PermModule& n)
{
    if (!(m.group() == n.group()))
        throw std::invalid_argument("hom_space across different groups");
    if (m.field() != n.field())
        throw FieldMismatch("hom_space across different fields");
    const auto& g = m.group();
    const auto dm = m.dimension(), dn = n.dimension();
    std::vector<int> label(dm * dn, -1);
    std::vector<FpMatrix> basis;
    for (std::size_t y = 0; y < dn; ++y)
        for (std::size_t x = 0; x < dm; ++x)
        {
            if (label[y * dm + x] >= 0)
                continue;
            FpMatrix a(m.field(), dn, dm);
            for (int e = 0; e < static_cast<int>(g.order()); ++e)
            {
                auto gy = static_cast<std::size_t>(n.act(e, static_cast<int>(y)));
                auto gx = static_cast<std::size_t>(m.act(e, static_cast<int>(x)));
                label[gy * dm + gx] = static_cast<int>(basis.size());
                a(gy, gx) = 1;
            }
            basis.push_back(std::move(a));
        }
    return basis;
}

} // namespace permtt
