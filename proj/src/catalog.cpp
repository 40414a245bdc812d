#include "permtt/catalog.hpp"

#include <cctype>
#include <functional>

#include "permtt/prime_field.hpp"

namespace permtt
{

namespace
{

class DescriptorParser
{
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    GroupDescriptor parse()
    {
        GroupDescriptor d;
        skip_space();
        d.factors.push_back(factor());
        skip_space();
        while (pos_ < text_.size())
        {
            if (lower(peek()) != 'x')
                throw DescriptorError("expected 'x' between factors", pos_);
            ++pos_;
            skip_space();
            d.factors.push_back(factor());
            skip_space();
        }
        return d;
    }

private:
    static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    unsigned number()
    {
        auto start = pos_;
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 100000)
                throw DescriptorError("number too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw DescriptorError("expected a number", pos_);
        return static_cast<unsigned>(v);
    }

    FactorSpec factor()
    {
        auto start = pos_;
        if (pos_ >= text_.size())
            throw DescriptorError("expected a group factor", pos_);
        char c = lower(text_[pos_++]);
        FactorSpec f{};
        switch (c)
        {
        case 'c':
            f.kind = FactorKind::Cyclic;
            f.n = number();
            if (f.n < 1)
                throw DescriptorError("cyclic order must be positive", start);
            break;
        case 'd':
            f.kind = FactorKind::Dihedral;
            f.n = number();
            if (f.n < 1)
                throw DescriptorError("dihedral parameter must be positive", start);
            break;
        case 'q':
            f.kind = FactorKind::Quaternion;
            f.n = number();
            if (f.n < 8 || f.n % 4 != 0)
                throw DescriptorError("quaternion order must be a multiple of 4, at least 8", start);
            break;
        case 's':
            f.kind = FactorKind::Symmetric;
            f.n = number();
            if (f.n < 1)
                throw DescriptorError("symmetric degree must be positive", start);
            break;
        case 'a':
            f.kind = FactorKind::Alternating4;
            if (number() != 4)
                throw DescriptorError("only A4 is supported", start);
            f.n = 4;
            break;
        case 'e':
            f.kind = FactorKind::ElementaryAbelian;
            f.n = number();
            if (!is_prime(f.n))
                throw DescriptorError("elementary abelian base must be prime", start);
            if (peek() != '^')
                throw DescriptorError("expected '^' in E<p>^<r>", pos_);
            ++pos_;
            f.r = number();
            if (f.r < 1)
                throw DescriptorError("rank must be positive", start);
            break;
        default:
            throw DescriptorError(std::string("unknown group factor '") + text_[start] + "'", start);
        }
        return f;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::size_t factor_order(const FactorSpec& f)
{
    switch (f.kind)
    {
    case FactorKind::Cyclic:
        return f.n;
    case FactorKind::Dihedral:
        return 2ull * f.n;
    case FactorKind::Quaternion:
        return f.n;
    case FactorKind::Alternating4:
        return 12;
    case FactorKind::ElementaryAbelian: {
        std::size_t o = 1;
        for (unsigned i = 0; i < f.r && o < (1ull << 40); ++i)
            o *= f.n;
        return o;
    }
    case FactorKind::Symmetric: {
        std::size_t o = 1;
        for (unsigned i = 2; i <= f.n && o < (1ull << 40); ++i)
            o *= i;
        return o;
    }
    }
    return 0;
}

struct PermSet
{
    int degree;
    std::vector<Permutation> generators;
};

Permutation cycle_perm(int degree, const std::vector<int>& cycle)
{
    Permutation p(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
        p[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        p[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return p;
}

// Left regular representation of a group given by labels 0..n-1.
PermSet regular(int n, const std::function<int(int, int)>& mul, const std::vector<int>& generator_labels)
{
    PermSet s{n, {}};
    for (int g : generator_labels)
    {
        Permutation p(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            p[static_cast<std::size_t>(x)] = mul(g, x);
        s.generators.push_back(std::move(p));
    }
    return s;
}

PermSet factor_generators(const FactorSpec& f)
{
    switch (f.kind)
    {
    case FactorKind::Cyclic: {
        int n = static_cast<int>(f.n);
        std::vector<int> cyc(f.n);
        for (int i = 0; i < n; ++i)
            cyc[static_cast<std::size_t>(i)] = i;
        return {n, {cycle_perm(n, cyc)}};
    }
    case FactorKind::ElementaryAbelian: {
        int p = static_cast<int>(f.n);
        int degree = p * static_cast<int>(f.r);
        PermSet s{degree, {}};
        for (unsigned b = 0; b < f.r; ++b)
        {
            std::vector<int> cyc;
            for (int i = 0; i < p; ++i)
                cyc.push_back(static_cast<int>(b) * p + i);
            s.generators.push_back(cycle_perm(degree, cyc));
        }
        return s;
    }
    case FactorKind::Dihedral: {
        // a^i b^j -> i + n j, with b a b^-1 = a^-1 and b^2 = 1
        int n = static_cast<int>(f.n);
        auto mul = [n](int u, int v) {
            int i = u % n, j = u / n, k = v % n, l = v / n;
            int ii = ((i + (j ? -k : k)) % n + n) % n;
            return ii + n * ((j + l) % 2);
        };
        return regular(2 * n, mul, {1 % (2 * n), n});
    }
    case FactorKind::Quaternion: {
        // dicyclic: a of order 2m, b^2 = a^m, b a b^-1 = a^-1
        int m = static_cast<int>(f.n) / 4;
        int n2 = 2 * m;
        auto mul = [m, n2](int u, int v) {
            int i = u % n2, j = u / n2, k = v % n2, l = v / n2;
            int ii = i + (j ? -k : k);
            int jj = j + l;
            if (jj == 2)
            {
                jj = 0;
                ii += m;
            }
            return ((ii % n2) + n2) % n2 + n2 * jj;
        };
        return regular(2 * n2, mul, {1, n2});
    }
    case FactorKind::Symmetric: {
        int n = static_cast<int>(f.n);
        if (n == 1)
            return {1, {}};
        std::vector<int> cyc(f.n);
        for (int i = 0; i < n; ++i)
            cyc[static_cast<std::size_t>(i)] = i;
        return {n, {cycle_perm(n, {0, 1}), cycle_perm(n, cyc)}};
    }
    case FactorKind::Alternating4:
        return {4, {cycle_perm(4, {0, 1, 2}), Permutation{1, 0, 3, 2}}};
    }
    return {1, {}};
}

} // namespace

std::size_t GroupDescriptor::order() const
{
    std::size_t o = 1;
    for (const auto& f : factors)
    {
        o *= factor_order(f);
        if (o > (1ull << 40))
            return o;
    }
    return o;
}

std::string GroupDescriptor::canonical() const
{
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i)
    {
        if (i)
            out += "x";
        const auto& f = factors[i];
        switch (f.kind)
        {
        case FactorKind::Cyclic:
            out += "C" + std::to_string(f.n);
            break;
        case FactorKind::ElementaryAbelian:
            out += "E" + std::to_string(f.n) + "^" + std::to_string(f.r);
            break;
        case FactorKind::Dihedral:
            out += "D" + std::to_string(f.n);
            break;
        case FactorKind::Quaternion:
            out += "Q" + std::to_string(f.n);
            break;
        case FactorKind::Symmetric:
            out += "S" + std::to_string(f.n);
            break;
        case FactorKind::Alternating4:
            out += "A4";
            break;
        }
    }
    return out;
}

GroupDescriptor parse_descriptor(std::string_view text) { return DescriptorParser(text).parse(); }

FiniteGroup build_group(const GroupDescriptor& d, std::size_t cap)
{
    auto order = d.order();
    if (order > cap)
        throw OrderCapExceeded(d.canonical() + " has order " + std::to_string(order) + ", above the cap " +
                               std::to_string(cap));
    std::vector<PermSet> parts;
    int degree = 0;
    for (const auto& f : d.factors)
    {
        parts.push_back(factor_generators(f));
        degree += parts.back().degree;
    }
    std::vector<Permutation> generators;
    int offset = 0;
    for (const auto& part : parts)
    {
        for (const auto& g : part.generators)
        {
            Permutation p(static_cast<std::size_t>(degree));
            for (int i = 0; i < degree; ++i)
                p[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < part.degree; ++i)
                p[static_cast<std::size_t>(offset + i)] = offset + g[static_cast<std::size_t>(i)];
            generators.push_back(std::move(p));
        }
        offset += part.degree;
    }
    return FiniteGroup::from_generators(degree, std::move(generators), cap, d.canonical());
}

FiniteGroup catalog(std::string_view descriptor, std::size_t cap) { return build_group(parse_descriptor(descriptor), cap); }

std::vector<std::string> catalog_descriptors(std::size_t max_order)
{
    static const std::vector<std::string> all = {
        "C1",    "C2",      "C3",      "C4",      "C5",      "C6",      "C7",        "C8",      "C9",
        "C10",   "C11",     "C12",     "C13",     "C14",     "C15",     "C16",       "E2^2",    "E2^3",
        "E2^4",  "E3^2",    "D3",      "D4",      "D5",      "D6",      "D7",        "D8",      "Q8",
        "Q12",   "Q16",     "S3",      "A4",      "C2xC4",   "C2xC6",   "C2xC8",     "C4xC4",   "C2xC2xC4",
        "C2xQ8", "C2xD4",   "C2xS3",   "C3xS3",   "C2xC16",  "C4xC8",   "C2xC2xC8",  "C2xC4xC4", "E2^5",
        "C32",   "D16",     "Q32",     "C4xQ8",   "C4xD4",   "C2xD8",   "C2xQ16",    "C2xC2xQ8", "C2xC2xD4",
        "S4",    "Q8xC3",   "C3xA4",   "C2xA4",   "E3^3"};
    std::vector<std::string> out;
    for (const auto& name : all)
        if (parse_descriptor(name).order() <= max_order)
            out.push_back(name);
    return out;
}

std::vector<std::string> catalog_two_groups(std::size_t max_order)
{
    std::vector<std::string> out;
    for (const auto& name : catalog_descriptors(max_order))
        if (is_p_power(parse_descriptor(name).order(), 2))
            out.push_back(name);
    return out;
}

} // namespace permtt
