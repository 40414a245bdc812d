#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permtt/catalog.hpp"
#include "permtt/cli.hpp"
#include "permtt/report.hpp"

namespace py = pybind11;
using namespace permtt;

namespace
{
std::string classify_json(const std::string& group, unsigned p, std::size_t max_order)
{
    auto rep = classify(catalog(group, max_order), p);
    rep.group = group;
    auto j = regularity_row(rep);
    j["witness_verified"] = verify_witness(rep);
    return j.dump();
}

std::string census_json(const std::vector<std::string>& groups, const std::vector<unsigned>& primes, std::size_t max_order)
{
    return census_report(census(groups, primes, max_order)).body.dump();
}

std::string closed_points_json(const std::string& group, unsigned p, std::size_t max_order)
{
    Json out = Json::array();
    for (const auto& pt : closed_points(catalog(group, max_order), p))
        out.push_back(closed_point_json(pt));
    return out.dump();
}

std::string verify_residue_json(const std::string& group, unsigned p)
{
    auto cand = build_residue_for(catalog(group), p);
    return residue_json(kappa_conditions_check(cand)).dump();
}

std::string verify_separable_json(const std::string& group, unsigned p, std::size_t max_order)
{
    auto g = catalog(group, max_order);
    Json out = Json::array();
    for (const auto& h : all_subgroups(g))
    {
        auto j = separability_json(check_separability(ring_structure(h, FieldSpec(p))));
        j["subgroup"] = subgroup_token(h);
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string trichotomy_json(const std::string& group, std::size_t max_order)
{
    auto t = two_group_trichotomy(catalog(group, max_order));
    Json j;
    j["branch"] = to_string(t.branch);
    j["witness"] = subgroup_json(t.witness);
    return j.dump();
}

std::size_t hom_dimension(const std::string& complex_text, const std::string& group, unsigned p,
                          const std::string& subgroup, int shift)
{
    auto g = catalog(group);
    FieldSpec f(p);
    auto s = realize(parse_complex_text(complex_text, g, f));
    return hom_from_generator(parse_subgroup_token(subgroup, g), shift, s);
}

py::tuple run_cli(const std::vector<std::string>& args)
{
    auto r = run_command_line(args);
    return py::make_tuple(r.exit_code, r.output, r.diagnostics);
}
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact checks for permutation modules over finite groups";

    m.attr("DEFAULT_MAX_ORDER") = kDefaultOrderCap;

    py::register_exception<DescriptorError>(m, "DescriptorError", PyExc_ValueError);
    py::register_exception<OrderCapExceeded>(m, "OrderCapExceeded", PyExc_ValueError);

    m.def("group_order", [](const std::string& g, std::size_t cap) { return catalog(g, cap).order(); },
          py::arg("group"), py::arg("max_order") = kDefaultOrderCap);
    m.def("classify", &classify_json, py::arg("group"), py::arg("p"), py::arg("max_order") = kDefaultOrderCap);
    m.def("census", &census_json, py::arg("groups"), py::arg("primes"), py::arg("max_order") = kDefaultOrderCap);
    m.def("closed_points", &closed_points_json, py::arg("group"), py::arg("p"),
          py::arg("max_order") = kDefaultOrderCap);
    m.def("verify_residue", &verify_residue_json, py::arg("group"), py::arg("p"));
    m.def("verify_separable", &verify_separable_json, py::arg("group"), py::arg("p"),
          py::arg("max_order") = kDefaultOrderCap);
    m.def("trichotomy", &trichotomy_json, py::arg("group"), py::arg("max_order") = kDefaultOrderCap);
    m.def("hom_dimension", &hom_dimension, py::arg("complex_text"), py::arg("group"), py::arg("p"),
          py::arg("subgroup"), py::arg("shift"));
    m.def("run_cli", &run_cli, py::arg("args"));
}
