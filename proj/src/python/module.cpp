#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/manifest.hpp"
#include "skewcliff/rewrite.hpp"
#include "skewcliff/runner.hpp"

namespace py = pybind11;

namespace {

using namespace skewcliff;

py::int_ to_py_int(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Presentation presentation_of(const std::vector<std::string>& generators,
                             const std::vector<std::string>& relations, bool function_field) {
    Scalar one = Scalar::integer(1);
    if (function_field) one = one.promote();
    std::vector<NCPoly> rels;
    for (const auto& r : relations) rels.push_back(parse_ncpoly(r, generators, function_field));
    Presentation p = Presentation::make(generators, rels, one);
    validate_presentation(p);
    return p;
}

py::list hilbert(const std::vector<std::string>& generators,
                 const std::vector<std::string>& relations, int max_degree,
                 bool function_field) {
    Presentation p = presentation_of(generators, relations, function_field);
    RewriteSystem rs = complete_truncated(p, max_degree, MonomialOrder::standard(p.n));
    py::list out;
    for (const auto& v : hilbert_function(rs, max_degree)) out.append(to_py_int(v));
    return out;
}

std::string normal_form_str(const std::string& expr, const std::vector<std::string>& generators,
                            const std::vector<std::string>& relations, int max_degree,
                            bool function_field) {
    Presentation p = presentation_of(generators, relations, function_field);
    RewriteSystem rs = complete_truncated(p, max_degree, MonomialOrder::standard(p.n));
    NCPoly f = parse_ncpoly(expr, generators, function_field);
    return normal_form(f, rs).to_string(generators);
}

py::tuple run_manifest_py(const std::string& text, std::optional<int> max_degree,
                          std::optional<std::uint64_t> seed) {
    RunOverrides o;
    o.max_degree = max_degree;
    o.seed = seed;
    RunResult res = run_manifest_text(text, o);
    return py::make_tuple(res.report, res.exit_code);
}

std::string validate_manifest_py(const std::string& text) {
    return parse_manifest(text).name;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact workbench for graded skew Clifford algebras";
    m.attr("__version__") = kToolVersion;
    m.def("hilbert", &hilbert, py::arg("generators"), py::arg("relations"),
          py::arg("max_degree") = 12, py::arg("function_field") = false,
          "graded slice dimensions of the presented algebra up to max_degree");
    m.def("normal_form", &normal_form_str, py::arg("expr"), py::arg("generators"),
          py::arg("relations"), py::arg("max_degree") = 12, py::arg("function_field") = false,
          "normal form of the expression modulo the completed relations");
    m.def("run_manifest", &run_manifest_py, py::arg("text"), py::arg("max_degree") = py::none(),
          py::arg("seed") = py::none(), "run a manifest; returns (report_json, exit_code)");
    m.def("validate_manifest", &validate_manifest_py, py::arg("text"),
          "parse and validate a manifest; returns its name");
}
