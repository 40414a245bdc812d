#include "permtt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "permtt/catalog.hpp"

namespace permtt
{

namespace
{
struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
    {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b != std::string::npos)
            out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

unsigned parse_prime(const std::string& s)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try
    {
        v = std::stoul(s, &used);
    }
    catch (const std::exception&)
    {
        throw UsageError("'" + s + "' is not a prime");
    }
    if (used != s.size() || v > 65535 || !is_prime(v))
        throw UsageError("'" + s + "' is not a prime below 65536");
    return static_cast<unsigned>(v);
}

unsigned single_prime(const CommandSpec& spec)
{
    auto list = split_list(spec.primes);
    if (list.size() != 1)
        throw UsageError("--p takes one prime for " + spec.subcommand);
    return parse_prime(list.front());
}

FiniteGroup require_group(const CommandSpec& spec)
{
    if (spec.group.empty())
        throw UsageError(spec.subcommand + " needs --group");
    return catalog(spec.group, spec.max_order);
}

Json point_list(const std::vector<ClosedPoint>& pts)
{
    Json a = Json::array();
    for (const auto& pt : pts)
        a.push_back(closed_point_json(pt));
    return a;
}

CommandResult finish(Report r, const CommandSpec& spec, bool failed)
{
    return {failed ? 1 : 0, emit(r, spec.format), ""};
}

CommandResult do_classify(const CommandSpec& spec)
{
    auto g = require_group(spec);
    auto rep = classify(g, single_prime(spec));
    rep.group = spec.group;
    Report r;
    r.columns = kCensusColumns;
    r.body = regularity_row(rep);
    bool witness_ok = verify_witness(rep);
    if (rep.witness)
        r.body["witness_subgroup"] = subgroup_json(*rep.witness);
    r.body["witness_verified"] = witness_ok;
    r.body["rows"] = Json::array({regularity_row(rep)});
    return finish(std::move(r), spec, !witness_ok);
}

CommandResult do_census(const CommandSpec& spec)
{
    std::vector<std::string> groups = spec.group.empty() ? catalog_descriptors(spec.max_order) : split_list(spec.group);
    std::vector<unsigned> primes;
    for (const auto& s : split_list(spec.primes))
        primes.push_back(parse_prime(s));
    auto rows = census(groups, primes, spec.max_order);
    bool failed = false, unparsed = false;
    for (const auto& row : rows)
    {
        failed = failed || (row.report && !verify_witness(*row.report));
        unparsed = unparsed || !row.report;
    }
    auto result = finish(census_report(rows), spec, failed);
    if (unparsed && result.exit_code == 0)
    {
        result.exit_code = 2;
        result.diagnostics += "error: some census rows could not be built (see \"errors\")\n";
    }
    return result;
}

CommandResult do_closed_points(const CommandSpec& spec)
{
    auto g = require_group(spec);
    const unsigned p = single_prime(spec);
    auto pts = closed_points(g, p);
    Report r;
    r.columns = {"order", "generators", "class_size"};
    r.body["group"] = spec.group;
    r.body["p"] = p;
    r.body["count"] = pts.size();
    r.body["points"] = point_list(pts);
    r.body["rows"] = Json::array();
    for (const auto& pt : pts)
    {
        Json row;
        row["order"] = pt.representative.order();
        row["generators"] = subgroup_token(pt.representative);
        row["class_size"] = pt.conjugates.size();
        r.body["rows"].push_back(std::move(row));
    }
    return finish(std::move(r), spec, false);
}

CommandResult do_support(const CommandSpec& spec)
{
    auto g = require_group(spec);
    const unsigned p = single_prime(spec);
    FieldSpec field(p);
    Report r;
    r.body["group"] = spec.group;
    r.body["p"] = p;
    if (spec.complex_text)
    {
        auto s = realize(parse_complex_text(*spec.complex_text, g, field));
        if (!s.is_bounded())
            throw UsageError("support is defined for bounded complexes; the given complex has a pattern");
        auto check = validate(s.window());
        if (!check.valid)
            throw UsageError("the given complex is invalid: " + check.reason);
        r.body["support"] = point_list(closed_support(s.window(), p));
        return finish(std::move(r), spec, false);
    }
    r.columns = {"module", "support"};
    r.body["rows"] = Json::array();
    for (const auto& cls : conjugacy_classes_of_subgroups(g))
    {
        auto supp = closed_support(BoundedComplex::concentrated(coset_module(cls.representative, field), 0), p);
        Json row;
        row["module"] = "k(G/" + subgroup_token(cls.representative) + ")";
        std::string names;
        for (const auto& pt : supp)
            names += (names.empty() ? "M(" : ",M(") + subgroup_token(pt.representative) + ")";
        row["support"] = names;
        row["points"] = point_list(supp);
        r.body["rows"].push_back(std::move(row));
    }
    return finish(std::move(r), spec, false);
}

CommandResult do_verify_residue(const CommandSpec& spec)
{
    auto g = require_group(spec);
    const unsigned p = single_prime(spec);
    ResidueCandidate c = [&] {
        if (spec.complex_text)
            return make_candidate(parse_complex_text(*spec.complex_text, g, FieldSpec(p)));
        try
        {
            return build_residue_for(g, p);
        }
        catch (const std::invalid_argument& e)
        {
            throw UsageError(e.what());
        }
    }();
    auto cert = kappa_conditions_check(c, spec.degree_window);
    Report r;
    r.body["group"] = spec.group;
    r.body["p"] = p;
    auto body = residue_json(cert);
    for (const auto& [key, value] : body.items())
        r.body[key] = value;
    r.columns = {"subgroup", "subgroup_order", "shift", "dim", "expected"};
    r.body["rows"] = r.body["hom_table"];
    return finish(std::move(r), spec, !cert.pass);
}

CommandResult do_verify_separable(const CommandSpec& spec)
{
    auto g = require_group(spec);
    const unsigned p = single_prime(spec);
    Report r;
    r.columns = {"subgroup", "dimension", "pass"};
    r.body["group"] = spec.group;
    r.body["p"] = p;
    r.body["rows"] = Json::array();
    bool all = true;
    for (const auto& h : all_subgroups(g))
    {
        auto cert = check_separability(ring_structure(h, FieldSpec(p)));
        all = all && cert.pass;
        Json row;
        row["subgroup"] = subgroup_token(h);
        row["dimension"] = g.order() / h.order();
        row["pass"] = cert.pass;
        row["checks"] = separability_json(cert)["checks"];
        r.body["rows"].push_back(std::move(row));
    }
    r.body["pass"] = all;
    return finish(std::move(r), spec, !all);
}

CommandResult do_hom(const CommandSpec& spec)
{
    auto g = require_group(spec);
    const unsigned p = single_prime(spec);
    FieldSpec field(p);
    Report r;
    r.body["group"] = spec.group;
    r.body["p"] = p;
    auto classes = conjugacy_classes_of_subgroups(g);

    if (spec.random > 0)
    {
        // hom_from_generator against the Hom-complex oracle
        std::mt19937_64 rng(spec.seed);
        std::size_t comparisons = 0;
        Json mismatches = Json::array();
        const int reach = spec.degree_window ? 0 : 4;
        const int lo = spec.degree_window ? spec.degree_window->lowest_shift : -reach;
        const int hi = spec.degree_window ? spec.degree_window->highest_shift : reach;
        for (int n = 0; n < spec.random; ++n)
        {
            auto b = random_complex(g, field, rng);
            for (const auto& cls : classes)
            {
                auto generator = coset_module(cls.representative, field);
                for (int i = lo; i <= hi; ++i)
                {
                    auto direct = hom_from_generator(cls.representative, i, b);
                    auto oracle = hom_complex_dim(BoundedComplex::concentrated(generator, -i), b, 0);
                    ++comparisons;
                    if (direct != oracle)
                    {
                        Json m;
                        m["complex"] = n;
                        m["subgroup"] = subgroup_token(cls.representative);
                        m["shift"] = i;
                        m["hom_from_generator"] = direct;
                        m["hom_complex_dim"] = oracle;
                        mismatches.push_back(std::move(m));
                    }
                }
            }
        }
        r.body["seed"] = spec.seed;
        r.body["complexes"] = spec.random;
        r.body["comparisons"] = comparisons;
        r.body["mismatches"] = mismatches;
        r.body["pass"] = mismatches.empty();
        return finish(std::move(r), spec, !mismatches.empty());
    }

    PeriodicComplex s = [&] {
        if (spec.complex_text)
            return realize(parse_complex_text(*spec.complex_text, g, field));
        try
        {
            return build_residue_for(g, p).s;
        }
        catch (const std::invalid_argument& e)
        {
            throw UsageError(std::string("hom needs --complex FILE or --random N: ") + e.what());
        }
    }();
    auto check = validate(s);
    if (!check.valid)
        throw UsageError("the complex is invalid: " + check.reason);
    auto range = spec.degree_window.value_or(default_degree_window(s));
    r.columns = {"subgroup", "shift", "dim"};
    r.body["rows"] = Json::array();
    for (const auto& cls : classes)
    {
        auto table = homology(apply_functor(s, CategoricalFixedPoints(cls.representative)));
        for (int i = range.lowest_shift; i <= range.highest_shift; ++i)
        {
            Json row;
            row["subgroup"] = subgroup_token(cls.representative);
            row["shift"] = i;
            row["dim"] = table.at(-i);
            r.body["rows"].push_back(std::move(row));
        }
    }
    return finish(std::move(r), spec, false);
}

CommandResult do_trichotomy(const CommandSpec& spec)
{
    auto g = require_group(spec);
    if (!is_p_power(g.order(), 2))
        throw UsageError("trichotomy needs a 2-group; |" + spec.group + "| = " + std::to_string(g.order()));
    auto t = two_group_trichotomy(g);
    Report r;
    r.body["group"] = spec.group;
    r.body["order"] = g.order();
    r.body["branch"] = to_string(t.branch);
    r.body["witness"] = subgroup_json(t.witness);
    bool ok = t.branch == TwoGroupBranch::Cyclic               ? is_cyclic(t.witness)
              : t.branch == TwoGroupBranch::ContainsKleinFour ? is_klein_four(t.witness)
                                                               : is_quaternion_eight(t.witness);
    r.body["witness_verified"] = ok;
    return finish(std::move(r), spec, !ok);
}
} // namespace

DegreeWindow parse_degree_window(std::string_view s)
{
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw UsageError("--degree-window expects LO:HI");
    try
    {
        std::size_t a = 0, b = 0;
        std::string lo(s.substr(0, colon)), hi(s.substr(colon + 1));
        int l = std::stoi(lo, &a), h = std::stoi(hi, &b);
        if (a != lo.size() || b != hi.size() || l > h)
            throw UsageError("");
        return {l, h};
    }
    catch (const std::exception&)
    {
        throw UsageError("--degree-window expects LO:HI with integers LO <= HI, got '" + std::string(s) + "'");
    }
}

CommandResult run(const CommandSpec& spec)
{
    try
    {
        if (spec.subcommand == "classify")
            return do_classify(spec);
        if (spec.subcommand == "census")
            return do_census(spec);
        if (spec.subcommand == "closed-points")
            return do_closed_points(spec);
        if (spec.subcommand == "support")
            return do_support(spec);
        if (spec.subcommand == "verify-residue")
            return do_verify_residue(spec);
        if (spec.subcommand == "verify-separable")
            return do_verify_separable(spec);
        if (spec.subcommand == "hom")
            return do_hom(spec);
        if (spec.subcommand == "trichotomy")
            return do_trichotomy(spec);
        return {2, "", "unknown subcommand '" + spec.subcommand + "'\n"};
    }
    catch (const OrderCapExceeded& e)
    {
        return {2, "", std::string("error: ") + e.what() + " (raise --max-order)\n"};
    }
    catch (const std::invalid_argument& e)
    {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
    catch (const std::exception& e)
    {
        return {1, "", std::string("internal error: ") + e.what() + "\n"};
    }
}

CommandResult run_command_line(const std::vector<std::string>& args, const char* default_format)
{
    CLI::App app{"Exact checks for permutation modules, residue complexes and residual regularity", "permtt"};
    app.require_subcommand(1);
    CommandSpec spec;
    std::string format, window, complex_file;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "Residual regularity verdict with witness"},
        {"census", "Classify a list of groups (default: the catalog) at a list of primes"},
        {"closed-points", "Closed points M(H), one per conjugacy class of p-subgroups"},
        {"support", "Closed-point support of coset modules or of a bounded complex"},
        {"verify-residue", "Check the residue-object conditions for C2, C_p or C2xC2"},
        {"verify-separable", "Check the separable ring identities for every k(G/H)"},
        {"hom", "Hom dimensions from shifted generators, or a seeded oracle run"},
        {"trichotomy", "Cyclic / Klein four / Q8 branch of a 2-group"},
    };
    for (const auto& [name, help] : commands)
    {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--group,-g", spec.group, "Group descriptor, e.g. C2xC2, Q8, D4, E2^3");
        sub->add_option("--p,-p", spec.primes, "Prime (census: comma-separated list)");
        sub->add_option("--format,-f", format, "json, tsv or text");
        sub->add_option("--seed", spec.seed, "Seed for randomized runs");
        sub->add_option("--max-order", spec.max_order, "Group order cap");
        sub->add_option("--degree-window", window, "Shift range LO:HI for Hom(k(G/K)[i], S)");
        sub->add_option("--complex", complex_file, "Complex description file")->check(CLI::ExistingFile);
        sub->add_option("--random", spec.random, "hom: number of random complexes to test against the oracle");
    }

    std::vector<const char*> argv{"permtt"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&)
    {
        return {0, app.help(), ""};
    }
    catch (const CLI::ParseError& e)
    {
        return {2, "", std::string("error: ") + e.what() + "\n" + app.help()};
    }

    try
    {
        if (!format.empty())
            spec.format = parse_format(format);
        else if (default_format && *default_format)
            spec.format = parse_format(default_format);
        if (!window.empty())
            spec.degree_window = parse_degree_window(window);
        if (!complex_file.empty())
        {
            std::ifstream in(complex_file);
            std::stringstream buf;
            buf << in.rdbuf();
            spec.complex_text = buf.str();
        }
    }
    catch (const std::invalid_argument& e)
    {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
    spec.subcommand = app.get_subcommands().front()->get_name();
    return run(spec);
}

} // namespace permtt
