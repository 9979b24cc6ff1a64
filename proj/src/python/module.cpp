#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurw/identities.hpp"
#include "schurw/json_io.hpp"
#include "schurw/tau.hpp"
#include "schurw/verify.hpp"
#include "schurw/vertex.hpp"
#include "schurw/wops.hpp"

namespace py = pybind11;
using namespace schurw;

namespace {

Basis basis_from_string(const std::string& s) {
    if (s == "schur") return Basis::Schur;
    if (s == "q") return Basis::Q;
    throw std::invalid_argument("basis must be 'schur' or 'q'");
}

py::dict lincomb_to_dict(const LinComb& lc) {
    py::dict d;
    for (const auto& [label, c] : lc.terms)
        d[py::tuple(py::cast(label))] = rat_to_string(c);
    return d;
}

RhoParam rho_from_string(const std::string& s) {
    return RhoParam(rat_from_string(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact vertex-operator engine for Schur and Schur Q-functions";

    py::class_<Poly>(m, "Poly")
        .def(py::init<>())
        .def("degree", &Poly::degree)
        .def("is_zero", &Poly::is_zero)
        .def("term_count", &Poly::term_count)
        .def("partial", &Poly::partial, py::arg("n"))
        .def("mul_var", &Poly::mul_var, py::arg("n"))
        .def("homogeneous_component", &Poly::homogeneous_component,
             py::arg("degree"))
        .def("evaluate",
             [](const Poly& p, const std::map<int, std::string>& a) {
                 VarAssignment va;
                 for (const auto& [n, v] : a) va[n] = rat_from_string(v);
                 return rat_to_string(p.evaluate(va));
             },
             py::arg("assignment"))
        .def("to_json", [](const Poly& p) { return poly_to_json(p).dump(); })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__repr__",
             [](const Poly& p) { return poly_to_json(p).dump(); });

    m.def("var", &Poly::var, py::arg("n"), "the variable t_n");
    m.def("constant",
          [](const std::string& c) { return Poly(rat_from_string(c)); });

    m.def("schur",
          [](const IntVector& lam) { return schur(lam); },
          py::arg("label"));
    m.def("qfun",
          [](const IntVector& lam) { return qfun(lam); },
          py::arg("label"));
    m.def("hall_littlewood",
          [](const IntVector& lam, const std::string& rho) {
              return hall_littlewood(lam, rho_from_string(rho));
          },
          py::arg("label"), py::arg("rho"));
    m.def("apply_B",
          [](int n, const Poly& p, const std::string& rho) {
              return apply_B(n, p, rho_from_string(rho));
          });
    m.def("apply_Bstar",
          [](int n, const Poly& p, const std::string& rho) {
              return apply_Bstar(n, p, rho_from_string(rho));
          });
    m.def("straighten",
          [](const IntVector& lam, const std::string& basis) {
              return lincomb_to_dict(basis_from_string(basis) == Basis::Q
                                         ? straighten_q(lam)
                                         : straighten_schur(lam));
          },
          py::arg("label"), py::arg("basis"));
    m.def("q_inner", [](const Poly& f, const Poly& g) {
        return rat_to_string(q_inner(f, g));
    });
    m.def("expand_in_basis",
          [](const Poly& p, const std::string& basis) {
              return lincomb_to_dict(expand_in_basis(p, basis_from_string(basis)));
          });

    m.def("apply_P_closed",
          [](long k, long m, const IntVector& lam, const std::string& basis) {
              return lincomb_to_dict(basis_from_string(basis) == Basis::Q
                                         ? apply_P_closed_q(k, m, lam)
                                         : apply_P_closed_s(k, m, lam));
          },
          py::arg("k"), py::arg("m"), py::arg("label"), py::arg("basis"));
    m.def("apply_P_brute",
          [](long k, long m, const Poly& p, const std::string& rho) {
              return apply_P_brute({k, m, rho_from_string(rho)}, p);
          });
    m.def("apply_P_modes",
          [](long k, long m, const Poly& p, const std::string& rho) {
              return apply_P_modes({k, m, rho_from_string(rho)}, p);
          });
    m.def("apply_named",
          [](const std::string& name, long mm, const Poly& p) {
              return apply_named(named_op_from_string(name, mm), p);
          },
          py::arg("name"), py::arg("m"), py::arg("p"));
    m.def("closed_action_named",
          [](const std::string& name, long mm, const IntVector& lam) {
              return lincomb_to_dict(
                  closed_action_named(named_op_from_string(name, mm), lam));
          },
          py::arg("name"), py::arg("m"), py::arg("label"));

    m.def("coeff_d", [](long k, long n) { return rat_to_string(coeff_d(k, n)); });
    m.def("coeff_c", [](long k, long mm, long n) {
        return rat_to_string(coeff_c(k, mm, n));
    });
    m.def("coeff_h", [](long k, long b, const std::string& rho) {
        return rat_to_string(coeff_h(k, b, rho_from_string(rho)));
    });
    m.def("coeff_g", [](long k, long b, const std::string& rho) {
        return rat_to_string(coeff_g(k, b, rho_from_string(rho)));
    });
    m.def("E_coeff",
          [](const IntVector& lam) { return rat_to_string(E_coeff(lam)); });
    m.def("A_coeff",
          [](const IntVector& lam) { return rat_to_string(A_coeff(lam)); });
    m.def("A_pfaffian",
          [](const IntVector& lam) { return rat_to_string(A_pfaffian(lam)); });
    m.def("a_coeff",
          [](const IntVector& lam) { return rat_to_string(a_coeff(lam)); });
    m.def("chain_count", [](const IntVector& mu) {
        return chain_count(mu).get_str();
    });
    m.def("double_fact",
          [](long n) { return rat_to_string(double_fact(n)); });

    m.def("tau",
          [](const std::string& model, int order, const std::string& method) {
              TauMethod tm = tau_method_from_string(method);
              Series s = model == "bgw" ? tau_bgw(order, tm) : tau_kw(order, tm);
              return series_to_json(s).dump();
          },
          py::arg("model"), py::arg("order"), py::arg("method") = "both");

    m.def("verify_suite",
          [](const std::string& name, int max_weight) {
              SuiteResult r("?");
              if (name == "relations") r = verify_relations();
              else if (name == "virasoro") r = verify_virasoro();
              else if (name == "named") r = verify_named(max_weight);
              else if (name == "identities") r = verify_identities();
              else if (name == "bgw") r = verify_tau_bgw(6);
              else if (name == "kw") r = verify_tau_kw(4);
              else throw std::invalid_argument("unknown suite: " + name);
              return py::make_tuple(r.pass(), r.cases);
          },
          py::arg("name"), py::arg("max_weight") = 6);

    py::register_exception<DiscrepancyError>(m, "DiscrepancyError");
}
