#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freearr/catalog.hpp"
#include "freearr/certs.hpp"
#include "freearr/classes.hpp"
#include "freearr/iso.hpp"
#include "freearr/lattice.hpp"

namespace py = pybind11;
using namespace freearr;

// String-in, string-out surface: arrangements travel in the text format,
// certificates and verdicts as JSON.  Keeps the module free of wrapper
// classes and trivially scriptable.
namespace {

Arrangement parse(const std::string& text, bool strict = false) {
    return parse_arrangement(text, strict);
}

}  // namespace

PYBIND11_MODULE(freearr, m) {
    m.doc() = "exact computations with rational central hyperplane arrangements";

    py::register_exception<FreearrError>(m, "FreearrError");

    m.def("catalog_names", &catalog_names);
    m.def("catalog_text", &catalog_text, py::arg("name"));

    m.def(
        "chi",
        [](const std::string& text) {
            return factored_string(integer_root_multiset(char_poly(parse(text))));
        },
        py::arg("arrangement"));

    m.def(
        "chi_roots",
        [](const std::string& text) -> py::object {
            RootSplit s = integer_root_multiset(char_poly(parse(text)));
            if (!s.splits) return py::none();
            return py::cast(s.roots);
        },
        py::arg("arrangement"), "integer root multiset, or None when chi does not split");

    m.def(
        "restriction",
        [](const std::string& text, const std::vector<IntVec>& normals) {
            Arrangement a = parse(text);
            return emit_arrangement(restriction(a, flat_from_normals(a, normals)));
        },
        py::arg("arrangement"), py::arg("flat_normals"));

    m.def(
        "deletion",
        [](const std::string& text, const IntVec& normal) {
            return emit_arrangement(deletion(parse(text), canonicalize(normal)));
        },
        py::arg("arrangement"), py::arg("normal"));

    m.def(
        "localization",
        [](const std::string& text, const std::vector<IntVec>& normals) {
            Arrangement a = parse(text);
            return emit_arrangement(localization(a, flat_from_normals(a, normals)));
        },
        py::arg("arrangement"), py::arg("flat_normals"));

    m.def(
        "product",
        [](const std::string& t1, const std::string& t2) {
            return emit_arrangement(product(parse(t1), parse(t2)));
        },
        py::arg("first"), py::arg("second"));

    m.def(
        "is_free",
        [](const std::string& text) { return freeness_verdict_json(is_free(parse(text))).dump(); },
        py::arg("arrangement"), "freeness verdict as a JSON string");

    m.def(
        "classify",
        [](const std::string& text, const std::string& klass, long long budget) {
            return class_verdict_json(classify(parse(text), klass, budget)).dump();
        },
        py::arg("arrangement"), py::arg("klass"), py::arg("budget") = 0,
        "class membership verdict as a JSON string");

    m.def(
        "verify_certificate",
        [](const std::string& text, const std::string& cert_json) {
            CertReport r = verify_certificate(parse(text), Json::parse(cert_json));
            return py::make_tuple(r.ok, r.kind, r.reason);
        },
        py::arg("arrangement"), py::arg("certificate"));

    m.def(
        "linear_isomorphic",
        [](const std::string& t1, const std::string& t2) {
            return linear_isomorphic(parse(t1), parse(t2)).has_value();
        },
        py::arg("first"), py::arg("second"));
}
