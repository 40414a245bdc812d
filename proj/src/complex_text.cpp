#include "permtt/complex_text.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace permtt
{

namespace
{
std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep)
        {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

// Evaluates a word such as g1g2^3 in the defining generators.
int parse_word(std::string_view w, const FiniteGroup& g)
{
    int element = g.identity();
    std::size_t i = 0;
    auto number = [&] {
        std::size_t start = i;
        long v = 0;
        while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i])))
            v = v * 10 + (w[i++] - '0');
        if (i == start)
            throw std::invalid_argument("expected a number in word '" + std::string(w) + "'");
        return v;
    };
    if (w == "1" || w == "e")
        return element;
    while (i < w.size())
    {
        if (w[i] != 'g' && w[i] != 'G')
            throw std::invalid_argument("bad generator word '" + std::string(w) + "'");
        ++i;
        auto index = number();
        if (index < 1 || static_cast<std::size_t>(index) > g.generators().size())
            throw std::invalid_argument("generator g" + std::to_string(index) + " does not exist");
        long e = 1;
        if (i < w.size() && w[i] == '^')
        {
            ++i;
            e = number();
        }
        element = g.mul(element, g.power(g.generators()[static_cast<std::size_t>(index - 1)], e));
    }
    return element;
}

// Shortest words in the defining generators, one per element.
std::vector<std::vector<int>> element_words(const FiniteGroup& g)
{
    std::vector<std::vector<int>> words(g.order());
    std::vector<char> seen(g.order(), 0);
    std::deque<int> queue{g.identity()};
    seen[static_cast<std::size_t>(g.identity())] = 1;
    while (!queue.empty())
    {
        int a = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < g.generators().size(); ++j)
        {
            int b = g.mul(a, g.generators()[j]);
            if (seen[static_cast<std::size_t>(b)])
                continue;
            seen[static_cast<std::size_t>(b)] = 1;
            words[static_cast<std::size_t>(b)] = words[static_cast<std::size_t>(a)];
            words[static_cast<std::size_t>(b)].push_back(static_cast<int>(j));
            queue.push_back(b);
        }
    }
    return words;
}

std::string format_word(const std::vector<int>& word)
{
    if (word.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size();)
    {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i])
            ++j;
        out += "g" + std::to_string(word[i] + 1);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

EntryTable parse_matrix(std::string_view text, std::size_t line)
{
    text = trim(text);
    if (text.size() < 4 || text.substr(0, 2) != "[[" || text.substr(text.size() - 2) != "]]")
        throw ComplexTextError("matrix must look like [[a, b], [c, d]]", line);
    EntryTable rows;
    auto body = text.substr(1, text.size() - 2); // [a, b], [c, d]
    std::size_t i = 0;
    while (i < body.size())
    {
        auto open = body.find('[', i);
        if (open == std::string_view::npos)
        {
            if (!trim(body.substr(i)).empty())
                throw ComplexTextError("unexpected text after matrix rows", line);
            break;
        }
        if (auto between = trim(body.substr(i, open - i)); !between.empty() && between != ",")
            throw ComplexTextError("expected ',' between matrix rows", line);
        auto close = body.find(']', open);
        if (close == std::string_view::npos)
            throw ComplexTextError("unterminated matrix row", line);
        std::vector<AugmentationPolynomial> row;
        auto inner = trim(body.substr(open + 1, close - open - 1));
        if (!inner.empty())
            for (auto entry : split(inner, ','))
            {
                try
                {
                    row.push_back(AugmentationPolynomial::parse(entry));
                }
                catch (const PolynomialSyntaxError& e)
                {
                    throw ComplexTextError(std::string("entry '") + std::string(entry) + "': " + e.what(), line);
                }
            }
        rows.push_back(std::move(row));
        i = close + 1;
    }
    return rows;
}

std::string format_matrix(const EntryTable& t)
{
    std::string out = "[";
    for (std::size_t r = 0; r < t.size(); ++r)
    {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < t[r].size(); ++c)
            out += (c ? ", " : "") + t[r][c].to_string();
        out += "]";
    }
    return out + "]";
}

std::vector<Subgroup> parse_summands(std::string_view text, const FiniteGroup& g, std::size_t line)
{
    std::vector<Subgroup> out;
    if (trim(text) == "0")
        return out;
    // split on '+' outside angle brackets
    int depth = 0;
    std::size_t start = 0;
    std::vector<std::string_view> tokens;
    for (std::size_t i = 0; i <= text.size(); ++i)
    {
        if (i < text.size() && text[i] == '<')
            ++depth;
        else if (i < text.size() && text[i] == '>')
            --depth;
        if (i == text.size() || (text[i] == '+' && depth == 0))
        {
            tokens.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    for (auto tok : tokens)
    {
        if (tok.size() < 3 || (tok[0] != 'G' && tok[0] != 'g') || tok[1] != '/')
            throw ComplexTextError("summand '" + std::string(tok) + "' is not of the form G/K", line);
        try
        {
            out.push_back(parse_subgroup_token(tok.substr(2), g));
        }
        catch (const ComplexTextError&)
        {
            throw;
        }
        catch (const std::invalid_argument& e)
        {
            throw ComplexTextError(e.what(), line);
        }
    }
    return out;
}

std::string format_summands(const std::vector<Subgroup>& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? " + G/" : "G/") + subgroup_token(s[i]);
    return out;
}

std::optional<int> parse_int(std::string_view s)
{
    s = trim(s);
    if (s.empty())
        return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+')
    {
        neg = s[0] == '-';
        ++i;
    }
    if (i == s.size())
        return std::nullopt;
    int v = 0;
    for (; i < s.size(); ++i)
    {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return std::nullopt;
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000)
            return std::nullopt;
    }
    return neg ? -v : v;
}
} // namespace

Subgroup parse_subgroup_token(std::string_view token, const FiniteGroup& g)
{
    token = trim(token);
    if (token == "1")
        return trivial_subgroup(g);
    if (token == "G")
        return whole_group(g);
    if (token.size() < 2 || token.front() != '<' || token.back() != '>')
        throw std::invalid_argument("subgroup token '" + std::string(token) + "' must be 1, G or <words>");
    std::vector<int> gens;
    for (auto w : split(token.substr(1, token.size() - 2), ','))
        gens.push_back(parse_word(w, g));
    return generate_subgroup(g, gens);
}

std::string subgroup_token(const Subgroup& h)
{
    const auto& g = h.parent();
    if (h.order() == 1)
        return "1";
    if (h.order() == g.order())
        return "G";
    auto words = element_words(g);
    std::vector<int> chosen;
    auto span = trivial_subgroup(g);
    for (int x : h.members())
    {
        if (span.contains(x))
            continue;
        chosen.push_back(x);
        span = generate_subgroup(g, chosen);
    }
    std::string out = "<";
    for (std::size_t i = 0; i < chosen.size(); ++i)
        out += (i ? "," : "") + format_word(words[static_cast<std::size_t>(chosen[i])]);
    return out + ">";
}

PeriodicComplex realize(const ComplexBlueprint& b)
{
    if (b.window.empty())
        throw std::invalid_argument("blueprint has an empty window");
    const int start = b.window.begin()->first;
    std::map<int, PermModule> terms;
    std::map<int, FpMatrix> diffs;
    for (const auto& [n, summands] : b.window)
        terms.emplace(n, sum_of_cosets(b.group, summands, b.field));
    auto block = [&](const std::vector<Subgroup>& src, const std::vector<Subgroup>& tgt, const EntryTable& e) {
        if (src.empty() || tgt.empty())
            return FpMatrix(b.field, sum_of_cosets(b.group, tgt, b.field).dimension(),
                            sum_of_cosets(b.group, src, b.field).dimension());
        return assemble_block_map(src, tgt, e, b.field).matrix();
    };
    auto summands_at = [&](int n) {
        auto it = b.window.find(n);
        return it == b.window.end() ? std::vector<Subgroup>{} : it->second;
    };
    for (const auto& [n, e] : b.window_maps)
        diffs.emplace(n, block(summands_at(n), summands_at(n + 1), e));
    BoundedComplex window(b.group, b.field, std::move(terms), std::move(diffs));
    if (b.pattern.empty())
        return PeriodicComplex(std::move(window), start, {}, {}, FpMatrix(b.field, 0, 0));

    const auto l = b.pattern.size();
    if (b.pattern_maps.size() != l)
        throw std::invalid_argument("pattern needs one map per term");
    std::vector<PermModule> pterms;
    std::vector<FpMatrix> pmaps;
    for (const auto& s : b.pattern)
        pterms.push_back(sum_of_cosets(b.group, s, b.field));
    for (std::size_t j = 0; j < l; ++j)
        pmaps.push_back(block(b.pattern[j], b.pattern[(j + l - 1) % l], b.pattern_maps[j]));
    auto junction = block(b.pattern[0], summands_at(start), b.junction);
    return PeriodicComplex(std::move(window), start, std::move(pterms), std::move(pmaps), std::move(junction));
}

ComplexBlueprint parse_complex_text(std::string_view text, const FiniteGroup& g, FieldSpec field)
{
    ComplexBlueprint b{g, field, {}, {}, {}, {}, {}};
    enum class Section
    {
        None,
        Window,
        Pattern
    } section = Section::None;
    bool have_junction = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line == "window:")
        {
            section = Section::Window;
            continue;
        }
        if (line == "pattern:")
        {
            section = Section::Pattern;
            continue;
        }
        if (line.rfind("junction:", 0) == 0)
        {
            b.junction = parse_matrix(line.substr(9), line_no);
            have_junction = true;
            section = Section::None;
            continue;
        }
        if (section == Section::Window)
        {
            auto colon = line.find(':');
            if (colon == std::string_view::npos)
                throw ComplexTextError("expected '<degree>: summands' or 'd<degree>: matrix'", line_no);
            auto key = trim(line.substr(0, colon));
            auto value = line.substr(colon + 1);
            if (!key.empty() && key[0] == 'd')
            {
                auto n = parse_int(key.substr(1));
                if (!n)
                    throw ComplexTextError("bad differential label '" + std::string(key) + "'", line_no);
                b.window_maps[*n] = parse_matrix(value, line_no);
            }
            else
            {
                auto n = parse_int(key);
                if (!n)
                    throw ComplexTextError("bad degree '" + std::string(key) + "'", line_no);
                b.window[*n] = parse_summands(value, g, line_no);
            }
        }
        else if (section == Section::Pattern)
        {
            auto colon = line.rfind(':');
            if (colon == std::string_view::npos)
                throw ComplexTextError("expected 'summands : matrix'", line_no);
            b.pattern.push_back(parse_summands(line.substr(0, colon), g, line_no));
            b.pattern_maps.push_back(parse_matrix(line.substr(colon + 1), line_no));
        }
        else
            throw ComplexTextError("text outside a section", line_no);
    }
    if (b.window.empty())
        throw ComplexTextError("missing window section", line_no);
    for (const auto& [n, e] : b.window_maps)
        if (!b.window.count(n) || !b.window.count(n + 1))
            throw ComplexTextError("d" + std::to_string(n) + " refers to a degree outside the window", line_no);
    if (!b.pattern.empty() && !have_junction)
        throw ComplexTextError("a pattern needs a junction", line_no);
    return b;
}

std::string format_complex_text(const ComplexBlueprint& b)
{
    std::string out = "window:\n";
    for (auto it = b.window.rbegin(); it != b.window.rend(); ++it)
        out += "  " + std::to_string(it->first) + ": " + format_summands(it->second) + "\n";
    for (auto it = b.window_maps.rbegin(); it != b.window_maps.rend(); ++it)
        out += "  d" + std::to_string(it->first) + ": " + format_matrix(it->second) + "\n";
    if (b.pattern.empty())
        return out;
    out += "pattern:\n";
    for (std::size_t j = 0; j < b.pattern.size(); ++j)
        out += "  " + format_summands(b.pattern[j]) + " : " + format_matrix(b.pattern_maps[j]) + "\n";
    out += "junction: " + format_matrix(b.junction) + "\n";
    return out;
}

} // namespace permtt
