#ifndef PERMTT_REPORT_HPP
#define PERMTT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "permtt/regularity.hpp"
#include "permtt/residue_objects.hpp"
#include "permtt/separable_ring.hpp"
#include "permtt/spectrum.hpp"

namespace permtt
{

using Json = nlohmann::ordered_json;

enum class Format
{
    Json,
    Tsv,
    Text
};

/// Throws std::invalid_argument for anything but json, tsv or text.
Format parse_format(std::string_view s);

/// A serializable result. TSV output lists body["rows"] under `columns`;
/// reports without rows emit key/value pairs.
struct Report
{
    Json body;
    std::vector<std::string> columns;
};

std::string emit(const Report& r, Format f);

inline const std::vector<std::string> kCensusColumns{"group", "order", "p", "modular", "verdict", "reason", "witness"};

Json subgroup_json(const Subgroup& h);
Json homology_json(const HomologyTable& t);
Json regularity_row(const RegularityReport& r);
Json closed_point_json(const ClosedPoint& pt);
Json residue_json(const ResidueCertificate& c);
Json separability_json(const SeparabilityCertificate& c);

Report census_report(const std::vector<CensusRow>& rows);

} // namespace permtt

#endif
