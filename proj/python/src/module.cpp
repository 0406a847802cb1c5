#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspcenter/errors.hpp"
#include "cuspcenter/report.hpp"

namespace py = pybind11;
using namespace cuspcenter;

namespace {

RunOptions options(std::optional<std::string> cache_dir, std::int64_t max_group_order, int t_count)
{
    RunOptions opts;
    opts.max_group_order = max_group_order;
    opts.t_count = t_count;
    if (cache_dir)
        opts.cache_dir = *cache_dir;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact verification of the centre of a cuspidal l-block";
    m.attr("__version__") = kToolVersion;

    auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
    (void)invalid;

    py::class_<ParameterSet>(m, "ParameterSet")
        .def_readonly("q", &ParameterSet::q)
        .def_readonly("ell", &ParameterSet::ell)
        .def_readonly("n", &ParameterSet::n)
        .def_readonly("d", &ParameterSet::d)
        .def_readonly("w", &ParameterSet::w)
        .def_readonly("r", &ParameterSet::r)
        .def("ell_power", &ParameterSet::ell_power)
        .def("__eq__", [](const ParameterSet& a, const ParameterSet& b) { return a == b; })
        .def("__repr__", [](const ParameterSet& ps) { return "<ParameterSet " + describe(ps) + ">"; });

    m.def("validate_parameters", &validate_parameters, py::arg("q"), py::arg("ell"), py::arg("n"), py::arg("d") = 1);
    m.def("reduce_parameters", &reduce_parameters, py::arg("params"));

    m.def(
        "run_json",
        [](const std::string& command, std::int64_t q, std::optional<std::int64_t> ell, std::optional<int> n, int d,
           std::optional<std::string> cache_dir, std::int64_t max_group_order, int t_count) {
            const CommandInput input{command, q, ell, n, d};
            Report report;
            {
                py::gil_scoped_release release;
                report = run_command(input, options(cache_dir, max_group_order, t_count));
            }
            return py::make_tuple(report.passed, render_json(report.envelope));
        },
        py::arg("command"), py::arg("q"), py::arg("ell") = py::none(), py::arg("n") = py::none(), py::arg("d") = 1,
        py::arg("cache_dir") = py::none(), py::arg("max_group_order") = 5000, py::arg("t_count") = 0,
        "Runs a command and returns (passed, report json).");

    m.def(
        "census_json",
        [](std::int64_t q, int n) {
            std::vector<ClassType> classes;
            {
                py::gil_scoped_release release;
                classes = enumerate_classes(q, n);
            }
            return census_to_json(q, n, classes).dump();
        },
        py::arg("q"), py::arg("n"));

    m.def("class_count", [](std::int64_t q, int n) { return gl_class_count(q, n).get_str(); }, py::arg("q"),
          py::arg("n"));
    m.def("group_order", [](std::int64_t q, int n) { return gl_order(q, n).get_str(); }, py::arg("q"), py::arg("n"));
}
