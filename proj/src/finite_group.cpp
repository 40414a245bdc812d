#include "permtt/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace permtt
{

struct FiniteGroup::Data
{
    int degree = 0;
    std::string name;
    std::vector<Permutation> elements;
    std::map<Permutation, int> index;
    std::vector<int> table; // table[a * order + b] = a*b
    std::vector<int> inverse;
    std::vector<int> generators;
    int identity = 0;

    mutable std::once_flag lattice_once;
    mutable std::vector<std::vector<int>> lattice;
};

namespace
{

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
}

Permutation identity_perm(int degree)
{
    Permutation p(static_cast<std::size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void check_permutation(const Permutation& p, int degree)
{
    if (static_cast<int>(p.size()) != degree)
        throw std::invalid_argument("permutation has wrong degree");
    std::vector<char> seen(p.size(), 0);
    for (int x : p)
    {
        if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

// Fills table, inverse and identity from elements/index.
void build_tables(FiniteGroup::Data& d)
{
    const auto n = d.elements.size();
    d.table.assign(n * n, -1);
    d.inverse.assign(n, -1);
    auto id = identity_perm(d.degree);
    auto it = d.index.find(id);
    if (it == d.index.end())
        throw std::invalid_argument("element list lacks the identity");
    d.identity = it->second;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            auto c = d.index.find(compose(d.elements[a], d.elements[b]));
            if (c == d.index.end())
                throw std::invalid_argument("element list is not closed under composition");
            d.table[a * n + b] = c->second;
            if (c->second == d.identity)
                d.inverse[a] = static_cast<int>(b);
        }
}

} // namespace

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<Permutation> generators, std::size_t cap,
                                         std::string name)
{
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->name = std::move(name);
    for (const auto& g : generators)
        check_permutation(g, degree);

    d->elements.push_back(identity_perm(degree));
    d->index.emplace(d->elements.front(), 0);
    for (std::size_t head = 0; head < d->elements.size(); ++head)
    {
        for (const auto& s : generators)
        {
            auto next = compose(s, d->elements[head]);
            if (d->index.count(next))
                continue;
            if (d->elements.size() >= cap)
                throw OrderCapExceeded("group order exceeds cap " + std::to_string(cap) +
                                       (d->name.empty() ? "" : " for " + d->name));
            d->index.emplace(next, static_cast<int>(d->elements.size()));
            d->elements.push_back(std::move(next));
        }
    }
    for (const auto& s : generators)
        d->generators.push_back(d->index.at(s));
    build_tables(*d);
    return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Permutation> elements,
                                       std::vector<int> generator_indices, std::string name)
{
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->name = std::move(name);
    for (std::size_t i = 0; i < elements.size(); ++i)
    {
        check_permutation(elements[i], degree);
        if (!d->index.emplace(elements[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate element");
    }
    d->elements = std::move(elements);
    d->generators = std::move(generator_indices);
    build_tables(*d);

    FiniteGroup g(std::move(d));
    if (generate_subgroup(g, g.generators()).order() != g.order())
        throw std::invalid_argument("generator list does not generate the element list");
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_generators(1, {}, 1, "C1"); }

std::size_t FiniteGroup::order() const noexcept { return d_->elements.size(); }
int FiniteGroup::degree() const noexcept { return d_->degree; }
const std::string& FiniteGroup::name() const noexcept { return d_->name; }
const Permutation& FiniteGroup::element(int i) const { return d_->elements.at(static_cast<std::size_t>(i)); }
int FiniteGroup::mul(int a, int b) const noexcept
{
    return d_->table[static_cast<std::size_t>(a) * d_->elements.size() + static_cast<std::size_t>(b)];
}
int FiniteGroup::inv(int a) const noexcept { return d_->inverse[static_cast<std::size_t>(a)]; }
int FiniteGroup::identity() const noexcept { return d_->identity; }
const std::vector<int>& FiniteGroup::generators() const noexcept { return d_->generators; }

int FiniteGroup::index_of(const Permutation& p) const
{
    auto it = d_->index.find(p);
    return it == d_->index.end() ? -1 : it->second;
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != identity(); x = mul(x, a))
        ++k;
    return k;
}

int FiniteGroup::power(int a, long e) const
{
    auto n = static_cast<long>(element_order(a));
    e = ((e % n) + n) % n;
    int x = identity();
    for (long i = 0; i < e; ++i)
        x = mul(x, a);
    return x;
}

bool FiniteGroup::is_abelian() const
{
    for (int a : generators())
        for (int b : generators())
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const
{
    return d_ == other.d_ || (d_->degree == other.d_->degree && d_->elements == other.d_->elements);
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), 0)
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int m : members_)
    {
        if (m < 0 || static_cast<std::size_t>(m) >= parent_.order())
            throw std::invalid_argument("subgroup member out of range");
        mask_[static_cast<std::size_t>(m)] = 1;
    }
    if (members_.empty() || !contains(parent_.identity()))
        throw std::invalid_argument("subgroup must contain the identity");
    for (int a : members_)
        for (int b : members_)
            if (!contains(parent_.mul(a, b)))
                throw std::invalid_argument("subgroup members not closed under composition");
}

bool Subgroup::is_subset_of(const Subgroup& other) const
{
    return std::all_of(members_.begin(), members_.end(), [&](int m) { return other.contains(m); });
}

int Subgroup::position(int g) const
{
    auto it = std::lower_bound(members_.begin(), members_.end(), g);
    return (it != members_.end() && *it == g) ? static_cast<int>(it - members_.begin()) : -1;
}

namespace
{
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& generators)
{
    std::vector<char> seen(g.order(), 0);
    std::vector<int> out{g.identity()};
    seen[static_cast<std::size_t>(g.identity())] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int s : generators)
        {
            int next = g.mul(s, out[head]);
            if (!seen[static_cast<std::size_t>(next)])
            {
                seen[static_cast<std::size_t>(next)] = 1;
                out.push_back(next);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<int>& generators)
{
    return Subgroup(g, closure(g, generators));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup whole_group(const FiniteGroup& g)
{
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b)
{
    std::vector<int> both;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(both));
    return Subgroup(a.parent(), std::move(both));
}

Subgroup conjugate(const Subgroup& h, int x)
{
    const auto& g = h.parent();
    std::vector<int> out;
    out.reserve(h.order());
    for (int m : h.members())
        out.push_back(g.mul(g.inv(x), g.mul(m, x)));
    return Subgroup(g, std::move(out));
}

FiniteGroup as_group(const Subgroup& h)
{
    const auto& g = h.parent();
    std::vector<Permutation> elements;
    for (int m : h.members())
        elements.push_back(g.element(m));

    // Greedy generating set, as positions within members().
    std::vector<int> gens_parent, gens_local;
    std::vector<int> current{g.identity()};
    for (std::size_t i = 0; i < h.members().size(); ++i)
    {
        int m = h.members()[i];
        if (std::binary_search(current.begin(), current.end(), m))
            continue;
        gens_parent.push_back(m);
        gens_local.push_back(static_cast<int>(i));
        current = closure(g, gens_parent);
    }
    return FiniteGroup::from_elements(g.degree(), std::move(elements), std::move(gens_local));
}

const std::vector<std::vector<int>>& subgroup_lattice(const FiniteGroup& g)
{
    const auto& d = *g.d_;
    std::call_once(d.lattice_once, [&] {
        // Seed with cyclic subgroups, then close under joins with a cyclic
        // subgroup until nothing new appears. Every subgroup is a join of
        // cyclic ones, so this reaches the whole lattice.
        std::map<std::vector<int>, std::vector<int>> found; // members -> small generating set
        std::vector<std::pair<std::vector<int>, int>> cyclic;
        for (int e = 0; e < static_cast<int>(g.order()); ++e)
        {
            auto c = closure(g, {e});
            if (found.emplace(c, std::vector<int>{e}).second)
                cyclic.emplace_back(c, e);
        }
        std::vector<std::vector<int>> frontier;
        for (const auto& [members, gens] : found)
            frontier.push_back(members);

        while (!frontier.empty())
        {
            std::vector<std::vector<int>> next;
            for (const auto& a : frontier)
            {
                const auto gens_a = found.at(a);
                for (const auto& [c, c_gen] : cyclic)
                {
                    if (std::binary_search(a.begin(), a.end(), c_gen))
                        continue;
                    auto gens = gens_a;
                    gens.push_back(c_gen);
                    auto joined = closure(g, gens);
                    if (found.emplace(joined, gens).second)
                        next.push_back(std::move(joined));
                }
            }
            frontier = std::move(next);
        }
        for (auto& [members, gens] : found)
            d.lattice.push_back(members);
        std::stable_sort(d.lattice.begin(), d.lattice.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
    });
    return d.lattice;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g)
{
    std::vector<Subgroup> out;
    for (const auto& members : subgroup_lattice(g))
        out.emplace_back(g, members);
    return out;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& g, std::optional<std::size_t> order_filter)
{
    std::vector<SubgroupClass> classes;
    std::set<std::vector<int>> visited;
    for (const auto& s : all_subgroups(g))
    {
        if (order_filter && s.order() != *order_filter)
            continue;
        if (visited.count(s.members()))
            continue;
        std::set<Subgroup> orbit;
        for (int x = 0; x < static_cast<int>(g.order()); ++x)
            orbit.insert(conjugate(s, x));
        SubgroupClass cls{*orbit.begin(), {orbit.begin(), orbit.end()}};
        for (const auto& m : cls.members)
            visited.insert(m.members());
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool is_p_power(std::size_t n, unsigned p)
{
    if (n == 0)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

bool is_p_subgroup(const Subgroup& h, unsigned p) { return is_p_power(h.order(), p); }

std::vector<SubgroupClass> p_subgroup_classes(const FiniteGroup& g, unsigned p)
{
    std::vector<SubgroupClass> out;
    for (auto& cls : conjugacy_classes_of_subgroups(g))
        if (is_p_subgroup(cls.representative, p))
            out.push_back(std::move(cls));
    return out;
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p)
{
    std::optional<Subgroup> best;
    for (const auto& s : all_subgroups(g))
        if (is_p_subgroup(s, p) && (!best || s.order() > best->order()))
            best = s;
    return *best; // the trivial subgroup always qualifies
}

bool is_cyclic(const Subgroup& h)
{
    const auto& g = h.parent();
    return std::any_of(h.members().begin(), h.members().end(),
                       [&](int m) { return static_cast<std::size_t>(g.element_order(m)) == h.order(); });
}

bool is_normal(const Subgroup& h)
{
    const auto& g = h.parent();
    for (int x : g.generators())
        if (!(conjugate(h, x) == h))
            return false;
    return true;
}

Subgroup normalizer(const Subgroup& h)
{
    const auto& g = h.parent();
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
        if (conjugate(h, x) == h)
            out.push_back(x);
    return Subgroup(g, std::move(out));
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g)
{
    auto subs = all_subgroups(g);
    std::vector<Subgroup> out;
    for (const auto& s : subs)
    {
        if (s.order() == g.order())
            continue;
        bool maximal = std::none_of(subs.begin(), subs.end(), [&](const Subgroup& t) {
            return t.order() > s.order() && t.order() < g.order() && s.is_subset_of(t);
        });
        if (maximal)
            out.push_back(s);
    }
    return out;
}

Subgroup frattini_subgroup(const FiniteGroup& g)
{
    Subgroup result = whole_group(g);
    for (const auto& m : maximal_subgroups(g))
        result = intersect(result, m);
    return result;
}

std::vector<int> transporter(const Subgroup& h, const Subgroup& k)
{
    const auto& g = h.parent();
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
    {
        bool inside = std::all_of(h.members().begin(), h.members().end(),
                                  [&](int m) { return k.contains(g.mul(g.inv(x), g.mul(m, x))); });
        if (inside)
            out.push_back(x);
    }
    return out;
}

bool is_subconjugate(const Subgroup& h, const Subgroup& k)
{
    if (k.order() % h.order() != 0)
        return false;
    return !transporter(h, k).empty();
}

std::size_t exponent(const Subgroup& h)
{
    std::size_t e = 1;
    for (int m : h.members())
        e = std::lcm(e, static_cast<std::size_t>(h.parent().element_order(m)));
    return e;
}

std::size_t involution_count(const Subgroup& h)
{
    return static_cast<std::size_t>(std::count_if(h.members().begin(), h.members().end(),
                                                  [&](int m) { return h.parent().element_order(m) == 2; }));
}

QuotientGroup quotient(const Subgroup& n)
{
    if (!is_normal(n))
        throw std::invalid_argument("quotient by a non-normal subgroup");
    const auto& g = n.parent();
    QuotientGroup q{g, n.members(), {}, std::vector<int>(g.order(), -1), g};
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
    {
        if (q.coset_of[static_cast<std::size_t>(x)] >= 0)
            continue;
        std::vector<int> coset;
        for (int m : n.members())
            coset.push_back(g.mul(x, m));
        std::sort(coset.begin(), coset.end());
        for (int y : coset)
            q.coset_of[static_cast<std::size_t>(y)] = static_cast<int>(q.cosets.size());
        q.cosets.push_back(std::move(coset));
    }
    const auto count = q.cosets.size();
    std::vector<Permutation> elements;
    for (std::size_t i = 0; i < count; ++i)
    {
        Permutation perm(count);
        for (std::size_t j = 0; j < count; ++j)
            perm[j] = q.coset_of[static_cast<std::size_t>(g.mul(q.cosets[i].front(), q.cosets[j].front()))];
        elements.push_back(std::move(perm));
    }
    std::vector<int> gens;
    for (int s : g.generators())
        gens.push_back(q.coset_of[static_cast<std::size_t>(s)]);
    q.group = FiniteGroup::from_elements(static_cast<int>(count), std::move(elements), std::move(gens));
    return q;
}

int WeylGroup::image_of(int g) const
{
    int pos = normalizer.position(g);
    return pos < 0 ? -1 : quotient.coset_of[static_cast<std::size_t>(pos)];
}

WeylGroup weyl_group(const Subgroup& h)
{
    auto n = normalizer(h);
    auto ng = as_group(n);
    std::vector<int> local;
    for (int m : h.members())
        local.push_back(n.position(m));
    auto q = quotient(Subgroup(ng, std::move(local)));
    return WeylGroup{h, std::move(n), std::move(q)};
}

std::string to_string(TwoGroupBranch b)
{
    switch (b)
    {
    case TwoGroupBranch::Cyclic:
        return "Cyclic";
    case TwoGroupBranch::ContainsKleinFour:
        return "ContainsKleinFour";
    case TwoGroupBranch::ContainsQ8:
        return "ContainsQ8";
    }
    return "?";
}

bool is_klein_four(const Subgroup& h) { return h.order() == 4 && exponent(h) == 2; }

bool is_quaternion_eight(const Subgroup& h)
{
    return h.order() == 8 && !is_cyclic(h) && involution_count(h) == 1;
}

TrichotomyResult two_group_trichotomy(const FiniteGroup& g)
{
    if (!is_p_power(g.order(), 2))
        throw std::invalid_argument("trichotomy needs a 2-group; order is " + std::to_string(g.order()));
    auto whole = whole_group(g);
    if (is_cyclic(whole))
        return {TwoGroupBranch::Cyclic, whole};
    auto subs = all_subgroups(g);
    for (const auto& s : subs)
        if (is_klein_four(s))
            return {TwoGroupBranch::ContainsKleinFour, s};
    for (const auto& s : subs)
        if (is_quaternion_eight(s))
            return {TwoGroupBranch::ContainsQ8, s};
    throw std::logic_error("2-group of order " + std::to_string(g.order()) +
                           " is neither cyclic nor contains C2xC2 or Q8");
}

std::string describe(const Subgroup& h)
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < h.members().size(); ++i)
        out << (i ? "," : "") << h.members()[i];
    out << "}";
    return out.str();
}

} // namespace permtt
