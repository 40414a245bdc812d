#include "permtt/group_algebra.hpp"

#include <cctype>
#include <sstream>

namespace permtt
{

void AugmentationPolynomial::add_term(Monomial m, std::int64_t c)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0)
        terms_.erase(m);
}

AugmentationPolynomial AugmentationPolynomial::constant(std::int64_t c)
{
    AugmentationPolynomial q;
    if (c != 0)
        q.add_term({}, c);
    return q;
}

AugmentationPolynomial AugmentationPolynomial::variable(std::size_t index, unsigned power)
{
    AugmentationPolynomial q;
    Monomial m(index + 1, 0);
    m[index] = power;
    q.add_term(std::move(m), 1);
    return q;
}

std::size_t AugmentationPolynomial::variables_used() const
{
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        n = std::max(n, m.size());
    return n;
}

AugmentationPolynomial AugmentationPolynomial::operator+(const AugmentationPolynomial& o) const
{
    auto out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

AugmentationPolynomial AugmentationPolynomial::operator*(const AugmentationPolynomial& o) const
{
    AugmentationPolynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
        {
            Monomial m(std::max(m1.size(), m2.size()), 0);
            for (std::size_t i = 0; i < m1.size(); ++i)
                m[i] += m1[i];
            for (std::size_t i = 0; i < m2.size(); ++i)
                m[i] += m2[i];
            out.add_term(std::move(m), c1 * c2);
        }
    return out;
}

namespace
{
class PolyParser
{
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    AugmentationPolynomial parse()
    {
        skip();
        if (pos_ >= s_.size())
            throw PolynomialSyntaxError("empty polynomial", pos_);
        AugmentationPolynomial total;
        bool first = true;
        while (pos_ < s_.size())
        {
            std::int64_t sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-')
            {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            }
            else if (!first)
                throw PolynomialSyntaxError("expected '+' or '-'", pos_);
            total = total + AugmentationPolynomial::constant(sign) * term();
            first = false;
            skip();
        }
        return total;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    std::int64_t number()
    {
        std::int64_t v = 0;
        auto start = pos_;
        while (digit())
        {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1'000'000'000)
                throw PolynomialSyntaxError("coefficient too large", start);
        }
        return v;
    }

    AugmentationPolynomial term()
    {
        AugmentationPolynomial t = AugmentationPolynomial::constant(1);
        bool any = false;
        if (digit())
        {
            t = AugmentationPolynomial::constant(number());
            any = true;
        }
        for (;;)
        {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*')
            {
                ++pos_;
                skip();
            }
            if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
                break;
            auto at = pos_;
            char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s_[pos_++])));
            std::size_t index;
            if (c == 't' || c == 'x')
            {
                index = 0;
                if (c == 'x' && digit())
                {
                    auto i = number();
                    if (i < 1)
                        throw PolynomialSyntaxError("variable index starts at 1", at);
                    index = static_cast<std::size_t>(i - 1);
                }
            }
            else if (c == 'y')
                index = 1;
            else if (c == 'z')
                index = 2;
            else
                throw PolynomialSyntaxError(std::string("unknown variable '") + s_[at] + "'", at);
            unsigned power = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^')
            {
                ++pos_;
                skip();
                if (!digit())
                    throw PolynomialSyntaxError("expected exponent", pos_);
                power = static_cast<unsigned>(number());
            }
            t = t * AugmentationPolynomial::variable(index, power);
            any = true;
        }
        if (!any)
            throw PolynomialSyntaxError("expected a term", pos_);
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};
} // namespace

AugmentationPolynomial AugmentationPolynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

FpVector AugmentationPolynomial::evaluate(const FiniteGroup& g, FieldSpec field) const
{
    const auto& gens = g.generators();
    if (variables_used() > gens.size())
        throw std::invalid_argument("polynomial uses x" + std::to_string(variables_used()) + " but the group has " +
                                    std::to_string(gens.size()) + " generators");
    FpVector total(g.order(), 0);
    for (const auto& [mono, coeff] : terms_)
    {
        FpVector v(g.order(), 0);
        v[static_cast<std::size_t>(g.identity())] = field.reduce(coeff);
        for (std::size_t i = 0; i < mono.size(); ++i)
            for (unsigned e = 0; e < mono[i]; ++e)
            {
                // v <- v * (g_i - 1)
                FpVector next(g.order(), 0);
                for (std::size_t a = 0; a < g.order(); ++a)
                {
                    if (v[a] == 0)
                        continue;
                    auto b = static_cast<std::size_t>(g.mul(static_cast<int>(a), gens[i]));
                    next[b] = field.add(next[b], v[a]);
                    next[a] = field.sub(next[a], v[a]);
                }
                v = std::move(next);
            }
        for (std::size_t a = 0; a < g.order(); ++a)
            total[a] = field.add(total[a], v[a]);
    }
    return total;
}

std::string AugmentationPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_)
    {
        auto c = coeff;
        if (!first)
            out << (c < 0 ? "-" : "+");
        else if (c < 0)
            out << "-";
        if (c < 0)
            c = -c;
        first = false;
        bool has_var = false;
        for (auto e : mono)
            has_var = has_var || e > 0;
        if (c != 1 || !has_var)
            out << c;
        for (std::size_t i = 0; i < mono.size(); ++i)
        {
            if (mono[i] == 0)
                continue;
            out << "x" << (i + 1);
            if (mono[i] > 1)
                out << "^" << mono[i];
        }
    }
    return out.str();
}

ModuleMap mult_entry_map(const AugmentationPolynomial& q, const Subgroup& k1, const Subgroup& k2, FieldSpec field)
{
    const auto& g = k1.parent();
    if (!(g == k2.parent()))
        throw std::invalid_argument("mult_entry_map: subgroups of different groups");
    if (!g.is_abelian())
        throw std::invalid_argument("mult_entry_map needs an abelian group");
    auto qv = q.evaluate(g, field);
    auto target_coset = coset_index(k2);
    auto source_coset = coset_index(k1);
    const std::size_t rows = g.order() / k2.order(), cols = g.order() / k1.order();

    // (k - 1) q must vanish in k(G/K2) for every k in K1.
    for (int k : k1.members())
    {
        FpVector image(rows, 0);
        for (std::size_t h = 0; h < g.order(); ++h)
        {
            if (qv[h] == 0)
                continue;
            auto kh = static_cast<std::size_t>(target_coset[static_cast<std::size_t>(g.mul(k, static_cast<int>(h)))]);
            auto hh = static_cast<std::size_t>(target_coset[h]);
            image[kh] = field.add(image[kh], qv[h]);
            image[hh] = field.sub(image[hh], qv[h]);
        }
        for (auto v : image)
            if (v != 0)
                throw IllDefinedEntry("entry " + q.to_string() + " does not descend from k(G/K1) to k(G/K2) with |K1|=" +
                                      std::to_string(k1.order()) + ", |K2|=" + std::to_string(k2.order()));
    }

    FpMatrix m(field, rows, cols);
    std::vector<char> done(cols, 0);
    for (std::size_t gi = 0; gi < g.order(); ++gi)
    {
        auto c = static_cast<std::size_t>(source_coset[gi]);
        if (done[c])
            continue;
        done[c] = 1;
        for (std::size_t h = 0; h < g.order(); ++h)
        {
            if (qv[h] == 0)
                continue;
            auto r = static_cast<std::size_t>(target_coset[static_cast<std::size_t>(g.mul(static_cast<int>(gi), static_cast<int>(h)))]);
            m(r, c) = field.add(m(r, c), qv[h]);
        }
    }
    return ModuleMap(coset_module(k1, field), coset_module(k2, field), std::move(m));
}

PermModule sum_of_cosets(const FiniteGroup& g, const std::vector<Subgroup>& summands, FieldSpec field)
{
    if (summands.empty())
        return zero_module(g, field);
    std::vector<PermModule> mods;
    for (const auto& k : summands)
        mods.push_back(coset_module(k, field));
    return direct_sum(mods).module;
}

ModuleMap assemble_block_map(const std::vector<Subgroup>& source, const std::vector<Subgroup>& target,
                             const std::vector<std::vector<AugmentationPolynomial>>& entries, FieldSpec field)
{
    if (source.empty() && target.empty())
        throw std::invalid_argument("block map between empty sums has no group");
    const auto& g = source.empty() ? target.front().parent() : source.front().parent();
    if (entries.size() != target.size())
        throw DimensionError("block matrix has " + std::to_string(entries.size()) + " rows, expected " +
                             std::to_string(target.size()));
    auto src = sum_of_cosets(g, source, field);
    auto tgt = sum_of_cosets(g, target, field);
    FpMatrix m(field, tgt.dimension(), src.dimension());
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < target.size(); ++i)
    {
        if (entries[i].size() != source.size())
            throw DimensionError("block row " + std::to_string(i) + " has " + std::to_string(entries[i].size()) +
                                 " entries, expected " + std::to_string(source.size()));
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < source.size(); ++j)
        {
            try
            {
                auto block = mult_entry_map(entries[i][j], source[j], target[i], field);
                m.place(block.matrix(), r0, c0);
            }
            catch (const IllDefinedEntry& e)
            {
                throw IllDefinedEntry("block (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
            }
            c0 += g.order() / source[j].order();
        }
        r0 += g.order() / target[i].order();
    }
    return ModuleMap(src, tgt, std::move(m));
}

} // namespace permtt
