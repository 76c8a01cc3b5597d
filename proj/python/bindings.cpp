#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "higher_jones/fixtures.hpp"
#include "higher_jones/jones_algebras.hpp"
#include "higher_jones/suites.hpp"

namespace py = pybind11;
using namespace hj;

namespace {

// cpp_int goes through its decimal string so nothing is truncated
py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list row_to_py(const DimensionRow& row) {
    py::list out;
    for (const auto& [w, d] : row.entries) out.append(py::make_tuple(py::tuple(py::cast(w.coords())), to_py(d)));
    return out;
}

AlgebraConfig make_config(const std::string& algebra, std::optional<int> p, std::optional<int> ell,
                          std::optional<int> delta, std::optional<int> n, std::optional<int> m) {
    auto need = [&](std::optional<int> v, const char* name) {
        if (!v) throw py::value_error(algebra + " needs " + name);
        return *v;
    };
    if (algebra == "symmetric") return AlgebraConfig::symmetric_group(need(p, "p"));
    if (algebra == "hecke") return AlgebraConfig::hecke(need(ell, "ell"));
    if (algebra == "brauer") return AlgebraConfig::brauer(need(delta, "delta"), need(p, "p"));
    if (algebra == "brauer-b") return AlgebraConfig::brauer_type_b(need(m, "m"), need(p, "p"));
    if (algebra == "bmw") return AlgebraConfig::bmw(need(n, "n"), need(ell, "ell"));
    throw py::value_error("unknown algebra " + algebra);
}

py::tuple report_to_py(const Report& r) { return py::make_tuple(r.ok, py::cast(r.lines)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simple-module dimensions for higher Jones algebras";
    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

    py::class_<AlgebraConfig>(m, "AlgebraConfig")
        .def(py::init(&make_config), py::arg("algebra"), py::kw_only(), py::arg("p") = py::none(),
             py::arg("ell") = py::none(), py::arg("delta") = py::none(), py::arg("n") = py::none(),
             py::arg("m") = py::none())
        .def_property_readonly("name", &AlgebraConfig::name)
        .def_property_readonly("rank", &AlgebraConfig::rank)
        .def("__repr__", [](const AlgebraConfig& c) { return "<AlgebraConfig " + c.name() + ">"; });

    m.def("simple_dims", [](const AlgebraConfig& c, int r) { return row_to_py(simple_dims(c, r)); },
          py::arg("config"), py::arg("r"), "[(weight, dim), ...] for row r");
    m.def(
        "table",
        [](const AlgebraConfig& c, int rmax) {
            py::list rows;
            for (const auto& row : simple_dims_rows(c, rmax)) rows.append(row_to_py(row));
            return rows;
        },
        py::arg("config"), py::arg("rmax"));
    m.def(
        "decompose",
        [](const AlgebraConfig& c, int r, int rank) {
            auto d = algebra_decomposition(c, r, rank);
            py::list blocks;
            for (const auto& [w, k] : d.blocks) blocks.append(py::make_tuple(py::tuple(py::cast(w.coords())), to_py(k)));
            return py::make_tuple(blocks, to_py(d.total));
        },
        py::arg("config"), py::arg("r"), py::arg("rank") = 0);

    m.def("verify_fixtures", [] { return report_to_py(verify_printed_tables()); });
    m.def("verify_oracles", [] {
        Report all;
        for (const auto& r : {suites::oracle_equivalence(), suites::conservation(), suites::brute_force()}) {
            all.ok = all.ok && r.ok;
            all.lines.insert(all.lines.end(), r.lines.begin(), r.lines.end());
        }
        return report_to_py(all);
    });
    m.def("verify_laws", [] { return report_to_py(suites::laws()); });
}
