#include "permtt/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permtt
{

Format parse_format(std::string_view s)
{
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "json")
        return Format::Json;
    if (lower == "tsv")
        return Format::Tsv;
    if (lower == "text")
        return Format::Text;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected json, tsv or text)");
}

namespace
{
std::string cell(const Json& v)
{
    if (v.is_null())
        return "-";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void text_lines(const Json& v, const std::string& indent, std::ostringstream& out)
{
    if (v.is_object())
    {
        for (const auto& [key, value] : v.items())
        {
            if (value.is_structured() && !value.empty())
            {
                out << indent << key << ":\n";
                text_lines(value, indent + "  ", out);
            }
            else
                out << indent << key << ": " << cell(value) << "\n";
        }
    }
    else if (v.is_array())
    {
        for (const auto& item : v)
        {
            if (item.is_object())
            {
                // one line per flat record
                bool flat = std::none_of(item.begin(), item.end(), [](const Json& x) { return x.is_structured(); });
                if (flat)
                {
                    out << indent << "-";
                    for (const auto& [key, value] : item.items())
                        out << " " << key << "=" << cell(value);
                    out << "\n";
                    continue;
                }
                out << indent << "-\n";
                text_lines(item, indent + "  ", out);
            }
            else if (item.is_array())
                text_lines(item, indent + "  ", out);
            else
                out << indent << "- " << cell(item) << "\n";
        }
    }
    else
        out << indent << cell(v) << "\n";
}
} // namespace

std::string emit(const Report& r, Format f)
{
    switch (f)
    {
    case Format::Json:
        return r.body.dump(2) + "\n";
    case Format::Text:
    {
        std::ostringstream out;
        text_lines(r.body, "", out);
        return out.str();
    }
    case Format::Tsv:
    {
        std::ostringstream out;
        if (!r.columns.empty())
        {
            for (std::size_t i = 0; i < r.columns.size(); ++i)
                out << (i ? "\t" : "") << r.columns[i];
            out << "\n";
            if (r.body.contains("rows"))
                for (const auto& row : r.body.at("rows"))
                {
                    for (std::size_t i = 0; i < r.columns.size(); ++i)
                        out << (i ? "\t" : "") << cell(row.contains(r.columns[i]) ? row.at(r.columns[i]) : Json());
                    out << "\n";
                }
            return out.str();
        }
        out << "key\tvalue\n";
        for (const auto& [key, value] : r.body.items())
            out << key << "\t" << (value.is_structured() ? value.dump() : cell(value)) << "\n";
        return out.str();
    }
    }
    return {};
}

Json subgroup_json(const Subgroup& h)
{
    Json j;
    j["order"] = h.order();
    j["generators"] = subgroup_token(h);
    j["members"] = h.members();
    return j;
}

Json homology_json(const HomologyTable& t)
{
    Json j;
    Json dims = Json::object();
    for (const auto& [n, d] : t.dims)
        dims[std::to_string(n)] = d;
    j["from_degree"] = t.from_degree;
    j["to_degree"] = t.to_degree;
    j["dims"] = std::move(dims);
    if (t.tail)
    {
        Json tail;
        tail["repeats_below"] = t.tail->repeats_below;
        tail["profile"] = t.tail->profile;
        tail["consistent"] = t.tail->consistent;
        j["periodic_tail"] = std::move(tail);
    }
    return j;
}

Json regularity_row(const RegularityReport& r)
{
    Json j;
    j["group"] = r.group;
    j["order"] = r.order;
    j["p"] = r.p;
    j["modular"] = r.modular;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = to_string(r.reason);
    j["witness"] = r.witness ? Json(subgroup_token(*r.witness)) : Json();
    return j;
}

Json closed_point_json(const ClosedPoint& pt)
{
    Json j;
    j["representative"] = subgroup_json(pt.representative);
    j["class_size"] = pt.conjugates.size();
    return j;
}

Json residue_json(const ResidueCertificate& c)
{
    Json j;
    Json table = Json::array();
    for (const auto& cell : c.hom_table)
    {
        Json row;
        row["subgroup"] = subgroup_token(cell.subgroup);
        row["subgroup_order"] = cell.subgroup.order();
        row["shift"] = cell.shift;
        row["dim"] = cell.dimension;
        row["expected"] = cell.expected;
        table.push_back(std::move(row));
    }
    j["hom_table"] = std::move(table);
    j["section_scalar"] = c.section_scalar ? Json(*c.section_scalar) : Json();
    Json comp;
    comp["verdict"] = to_string(c.compactness.verdict);
    comp["reason"] = c.compactness.reason;
    if (c.compactness.psi_homology)
        comp["psi_homology"] = homology_json(*c.compactness.psi_homology);
    j["compactness"] = std::move(comp);
    Json checks;
    checks["complex_valid"] = c.complex_check.valid;
    checks["zeta_chain_map"] = c.zeta_check.valid;
    checks["sigma_chain_map"] = c.sigma_check.valid;
    checks["hom_conditions"] = c.hom_conditions;
    checks["zeta_not_null_homotopic"] = c.zeta_not_null_homotopic;
    j["checks"] = std::move(checks);
    j["failures"] = c.failures;
    j["pass"] = c.pass;
    return j;
}

Json separability_json(const SeparabilityCertificate& c)
{
    Json j;
    Json checks = Json::array();
    for (const auto& check : c.checks)
    {
        Json row;
        row["identity"] = check.name;
        row["holds"] = check.holds;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["pass"] = c.pass;
    return j;
}

Report census_report(const std::vector<CensusRow>& rows)
{
    Report r;
    r.columns = kCensusColumns;
    r.body["rows"] = Json::array();
    r.body["errors"] = Json::array();
    for (const auto& row : rows)
    {
        if (row.report)
            r.body["rows"].push_back(regularity_row(*row.report));
        else
        {
            Json e;
            e["group"] = row.descriptor;
            e["p"] = row.p;
            e["error"] = row.error;
            r.body["errors"].push_back(std::move(e));
        }
    }
    return r;
}

} // namespace permtt
