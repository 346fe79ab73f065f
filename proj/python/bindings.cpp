#include "twinrow/characters.hpp"
#include "twinrow/cli.hpp"
#include "twinrow/diffops.hpp"
#include "twinrow/partitions.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace twinrow;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::module_::import("builtins").attr("int")(v.get_str())); }

SchurExpansion from_py(const py::dict& d) {
    SchurExpansion e;
    for (const auto& [k, v] : d)
        e.add(Partition(k.cast<std::vector<int>>()), Integer(py::str(v).cast<std::string>()));
    return e;
}

py::dict to_py(const SchurExpansion& e) {
    py::dict d;
    for (const auto& [p, c] : e.terms())
        d[py::tuple(py::cast(p.parts()))] = to_py(c);
    return d;
}

py::tuple cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"twinrow"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact symmetric-function generating functions in the twinrow C++ library";

    m.def("cli", &cli, py::arg("args"),
          "Run the command-line front end in process; returns (exit code, stdout, stderr).");

    m.def("conjugate", [](const std::vector<int>& p) { return conjugate(Partition(p)).parts(); }, py::arg("partition"));
    m.def(
        "to_frobenius",
        [](const std::vector<int>& p) {
            const auto fc = to_frobenius(Partition(p));
            return py::make_tuple(fc.arms, fc.legs);
        },
        py::arg("partition"));
    m.def(
        "from_frobenius",
        [](const std::vector<int>& arms, const std::vector<int>& legs) {
            return from_frobenius({arms, legs}).parts();
        },
        py::arg("arms"), py::arg("legs"));

    m.def("D1", [](const py::dict& e) { return to_py(D1_graphical(from_py(e))); }, py::arg("expansion"),
          "Box removal on a {partition: coefficient} Schur expansion.");
    m.def("D2", [](const py::dict& e) { return to_py(D2_graphical(from_py(e))); }, py::arg("expansion"),
          "Removal of two boxes in distinct rows.");
    m.def("Z_hook_sum", [](int d, std::size_t n) { return to_py(Z_hook_sum(d, n)); }, py::arg("d"), py::arg("n"));
    m.def("G_hook_sum", [](int k, std::size_t n) { return to_py(G_hook_sum(k, n)); }, py::arg("k"), py::arg("n"));
    m.def(
        "character_z",
        [](const std::vector<int>& p, std::size_t n) { return to_string(giambelli_character(Partition(p), n)); },
        py::arg("partition"), py::arg("n"));
}
