#include "gie/catalog.hpp"
#include "gie/engine.hpp"
#include "gie/io.hpp"
#include "gie/measures.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gie;

namespace {

py::dict report_dict(const GieReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["method"] = to_string(r.method);
    d["state_class"] = to_string(r.state_class);
    d["separable"] = r.separable;
    d["lo"] = r.lo;
    d["hi"] = r.hi;
    d["heuristic"] = r.heuristic;
    d["upper_u"] = r.upper_u;
    d["lower_l"] = r.lower_l;
    d["homodyne_cond_ok"] = r.homodyne_cond_ok;
    d["g_tilde_min"] = r.g_tilde_min;
    d["nu1"] = r.nu1;
    d["nu2"] = r.nu2;
    d["gr2eof"] = r.gr2eof ? py::object(py::float_(*r.gr2eof)) : py::object(py::none());
    d["log_negativity"] = r.log_negativity;
    if (r.optimal_eve)
        d["optimal_eve"] = py::dict(py::arg("phi") = r.optimal_eve->phi,
                                    py::arg("tau") = r.optimal_eve->tau,
                                    py::arg("t") = r.optimal_eve->t,
                                    py::arg("limit") = to_string(r.optimal_eve->limit));
    else
        d["optimal_eve"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_gie, m) {
    m.doc() = "Gaussian intrinsic entanglement core";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<NumericFailure>(m, "NumericFailure", PyExc_ArithmeticError);

    py::class_<StdState>(m, "StdState")
        .def(py::init(&StdState::make), py::arg("a"), py::arg("b"), py::arg("kx"), py::arg("kp"))
        .def_readonly("a", &StdState::a)
        .def_readonly("b", &StdState::b)
        .def_readonly("kx", &StdState::kx)
        .def_readonly("kp", &StdState::kp)
        .def("cm", &StdState::cm)
        .def("__repr__", [](const StdState& s) {
            return "StdState(a=" + std::to_string(s.a) + ", b=" + std::to_string(s.b) +
                   ", kx=" + std::to_string(s.kx) + ", kp=" + std::to_string(s.kp) + ")";
        });

    m.def("is_physical", &is_physical);
    m.def("is_entangled", &is_entangled);
    m.def("classify", [](const StdState& s) { return std::string(to_string(classify(s))); });
    m.def("symplectic_eigenvalues", &symplectic_eigenvalues);
    m.def("williamson", [](const StdState& s) {
        const auto d = williamson(s);
        return py::make_tuple(d.S, d.nu1, d.nu2, to_string(d.tag));
    });
    m.def("upper_bound_u", py::overload_cast<const StdState&>(&upper_bound_u));
    m.def("lower_bound_l", py::overload_cast<const StdState&>(&lower_bound_l));
    m.def("gie", [](const StdState& s) { return report_dict(gie::gie(s)); });
    m.def("gr2eof", &gr2eof_glems);
    m.def("log_negativity", &log_negativity);
    m.def("analyze_json", [](const StdState& s) { return report_to_json(s, gie::gie(s)).dump(); });
    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog()) {
            py::dict exp;
            for (const auto& [k, v] : e.expected)
                exp[py::str(k)] = v;
            out.append(py::dict(py::arg("id") = e.id, py::arg("state") = e.state,
                                py::arg("class") = to_string(e.class_tag),
                                py::arg("expected") = exp));
        }
        return out;
    });
}
