// Python bindings. Pairs go in as {"A": [[a, b], [c, d]], "B": ...} (entries int, str "p/q" or float)
// and results come back as plain dicts, the same documents the CLI prints under "outputs".
#include "sturmian/cli.hpp"
#include "sturmian/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sturmian;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

MatrixPair from_py(const py::object& pair) {
    if (pair.is_none()) return golden_pair();
    const std::string text = py::module_::import("json").attr("dumps")(pair).cast<std::string>();
    return parse_pair_text(text).pair;
}

template <class F>
auto released(F&& f) {
    py::gil_scoped_release nogil;
    return f();
}

}  // namespace

PYBIND11_MODULE(sturmian, m) {
    m.doc() = "Sturmian maximizing slopes for balanced 2x2 matrix pairs";
    m.attr("__version__") = kVersion;

    m.def("classify", [](const py::object& pair) {
        const MatrixPair p = from_py(pair);
        const PairAnalysis a = analyze(p);
        Json out = to_json(a);
        if (is_balanced_class(a.cls)) out["T"] = to_json(normal_form_conjugator(p));
        return to_py(out);
    }, py::arg("pair") = py::none());

    m.def("maximize_slope", [](const py::object& pair, std::uint64_t max_den) {
        const MatrixPair p = from_py(pair);
        return to_py(to_json(released([&] { return maximize_slope(p, max_den); })));
    }, py::arg("pair") = py::none(), py::arg("max_den") = 10000);

    m.def("chi_rational", [](const py::object& pair, std::uint64_t p, std::uint64_t q) {
        return to_py(to_json(chi_rational(from_py(pair), SlopeFraction(p, q))));
    }, py::arg("pair"), py::arg("p"), py::arg("q"));

    m.def("trace_argmax", [](const py::object& pair, std::size_t l, std::size_t n) {
        return to_py(to_json(trace_argmax(from_py(pair), l, n)));
    }, py::arg("pair"), py::arg("l"), py::arg("n"));

    m.def("jsr_bounds", [](const py::object& pair, std::size_t depth) {
        const MatrixPair p = from_py(pair);
        return to_py(to_json(released([&] { return jsr_bounds(p, depth); })));
    }, py::arg("pair") = py::none(), py::arg("depth") = 8);

    m.def("suite_names", &suite_names);

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        const Outcome o = released([&] { return run_cli(args, in); });
        return py::make_tuple(o.exit_code, o.out, o.err);
    }, py::arg("args"), py::arg("stdin") = "");
}
