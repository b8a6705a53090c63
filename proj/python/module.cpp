#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "decomp/diagnostics.hpp"
#include "decomp/json_io.hpp"
#include "decomp/suites.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "decomposition complexes of finite posets (JSON-string interface)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const decomp::input_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const decomp::resource_error& e) {
            PyErr_SetString(PyExc_ResourceWarning, e.what());
        }
    });

    m.def("complex_json", &decomp::run_complex, py::arg("poset"), py::arg("gset") = "min",
          py::arg("max_chains") = std::size_t(1000000),
          "Face poset of D(P, G) as JSON text.");
    m.def("realize_json", &decomp::run_realize, py::arg("poset"), py::arg("gset") = "min",
          py::arg("phi") = "canonical", py::arg("format") = "json",
          py::arg("max_chains") = std::size_t(1000000),
          "Geometry of D(P, G) under the chosen realization, as JSON or OFF text.");
    m.def("product_json", &decomp::run_product, py::arg("poset1"), py::arg("gset1"),
          py::arg("poset2"), py::arg("gset2"), py::arg("max_chains") = std::size_t(1000000),
          "Product complex with the factor isomorphism, as JSON text.");
    m.def("coproduct_json", &decomp::run_coproduct, py::arg("poset1"), py::arg("gset1"),
          py::arg("poset2"), py::arg("gset2"), py::arg("max_chains") = std::size_t(1000000),
          "Complex of a disjoint union, as JSON text.");
    m.def("nested_json", &decomp::run_nested, py::arg("poset"), py::arg("building") = "atoms",
          py::arg("max_chains") = std::size_t(1000000),
          "Nested set complex of a building set, as JSON text.");
    m.def("bergman_json", &decomp::run_bergman, py::arg("matroid"),
          py::arg("max_chains") = std::size_t(1000000),
          "Bergman fan of a matroid, as JSON text.");

    m.def(
        "verify",
        [](const std::string& suites, int max_n, std::uint64_t seed, int grid_denominator,
           std::size_t max_chains) {
            decomp::SuiteOptions opt;
            opt.max_n = max_n;
            opt.seed = seed;
            opt.grid_denominator = grid_denominator;
            opt.max_chains = max_chains;
            py::list out;
            for (const decomp::SuiteResult& r : decomp::run_suites(suites, opt)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("suites") = "all", py::arg("max_n") = 0, py::arg("seed") = std::uint64_t(2026),
        py::arg("grid_denominator") = 4, py::arg("max_chains") = std::size_t(1000000),
        "Run verification suites; returns a list of result dicts.");

    m.def("suite_names", [] { return decomp::suite_names(); },
          "Names of the verification suites, in canonical order.");
}
