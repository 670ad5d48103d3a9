#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "qsym/symmetry.hpp"

namespace py = pybind11;
using namespace qsym;

namespace {

py::object mpz_to_int(const mpz_class& z) {
    return py::int_(py::str(z.get_str()));
}

py::object valuation_to_py(const Valuation& v) {
    if (!v.has_value()) return py::cast(std::numeric_limits<double>::infinity());
    return py::cast(*v);
}

py::object report_valuation(const SymmetryReport& rep) {
    if (!rep.defect_valuation.has_value()) return py::none();
    return valuation_to_py(*rep.defect_valuation);
}

Rat rat_from_object(const py::object& obj) {
    if (py::isinstance<Rat>(obj)) return obj.cast<Rat>();
    if (py::isinstance<py::int_>(obj))
        return Rat(mpz_class(py::str(obj).cast<std::string>()));
    if (py::isinstance<py::str>(obj))
        return Rat::parse(obj.cast<std::string>());
    throw py::type_error("expected Rat, int, or rational string");
}

}  // namespace

PYBIND11_MODULE(_qsym, m) {
    m.doc() = "exact q-Euler polynomials, fermionic p-adic integrals, and "
              "their symmetry identities";

    py::class_<Rat>(m, "Rat")
        .def(py::init([](const py::object& v) { return rat_from_object(v); }),
             py::arg("value"))
        .def(py::init([](long num, long den) { return Rat(num, den); }),
             py::arg("num"), py::arg("den"))
        .def_property_readonly("num", [](const Rat& r) { return mpz_to_int(r.num()); })
        .def_property_readonly("den", [](const Rat& r) { return mpz_to_int(r.den()); })
        .def("__str__", &Rat::str)
        .def("__repr__", [](const Rat& r) { return "Rat(\"" + r.str() + "\")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def("__pow__", [](const Rat& r, unsigned long e) { return r.pow(e); })
        .def("__hash__", [](const Rat& r) { return py::hash(py::str(r.str())); });

    py::implicitly_convertible<py::int_, Rat>();
    py::implicitly_convertible<py::str, Rat>();

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::vector<py::object>& coeffs) {
                 std::vector<Rat> c;
                 c.reserve(coeffs.size());
                 for (const auto& obj : coeffs) c.push_back(rat_from_object(obj));
                 return Poly(std::move(c));
             }),
             py::arg("coeffs"))
        .def_static("parse", &Poly::parse, py::arg("text"), py::arg("var") = "q")
        .def_property_readonly("degree", &Poly::degree)
        .def("coeff", &Poly::coeff, py::arg("k"))
        .def("eval", [](const Poly& p, const py::object& x) {
                 return p.eval(rat_from_object(x));
             }, py::arg("x"))
        .def("subst_power", &Poly::subst_power, py::arg("k"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", [](const Poly& p) { return p.str(); })
        .def("__repr__", [](const Poly& p) { return "Poly.parse(\"" + p.str() + "\")"; });

    py::class_<RatFunc>(m, "RatFunc")
        .def(py::init<Poly, Poly>(), py::arg("num"), py::arg("den"))
        .def(py::init<Poly>(), py::arg("num"))
        .def_static("parse", &RatFunc::parse, py::arg("text"), py::arg("var") = "q")
        .def_property_readonly("num", &RatFunc::num)
        .def_property_readonly("den", &RatFunc::den)
        .def("eval", [](const RatFunc& f, const py::object& q0) {
                 return f.eval(rat_from_object(q0));
             }, py::arg("q0"))
        .def("eval_at_one", &RatFunc::eval_at_one)
        .def("subst_power", &RatFunc::subst_power, py::arg("k"))
        .def("__pow__", [](const RatFunc& f, unsigned e) { return f.pow(e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("__str__", [](const RatFunc& f) { return f.str(); })
        .def("__repr__",
             [](const RatFunc& f) { return "RatFunc.parse(\"" + f.str() + "\")"; });

    py::class_<PadicInt>(m, "PadicInt")
        .def(py::init([](unsigned long p, unsigned N, long value) {
                 return PadicInt(p, N, mpz_class(value));
             }),
             py::arg("p"), py::arg("N"), py::arg("value"))
        .def_property_readonly("p", &PadicInt::p)
        .def_property_readonly("precision", &PadicInt::precision)
        .def_property_readonly("residue",
                               [](const PadicInt& x) { return mpz_to_int(x.residue()); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &PadicInt::str);

    py::class_<IntegralConfig>(m, "IntegralConfig")
        .def(py::init([](unsigned long p, unsigned N_max, const py::object& q0) {
                 return IntegralConfig(p, N_max, rat_from_object(q0));
             }),
             py::arg("p"), py::arg("N_max"), py::arg("q0"))
        .def_static("with_default_q", &IntegralConfig::with_default_q,
                    py::arg("p"), py::arg("N_max"))
        .def_readonly("p", &IntegralConfig::p)
        .def_readonly("N_max", &IntegralConfig::N_max)
        .def_readonly("q0", &IntegralConfig::q0);

    py::enum_<CheckMode>(m, "CheckMode")
        .value("symbolic", CheckMode::symbolic)
        .value("rational", CheckMode::rational)
        .value("padic", CheckMode::padic);

    py::class_<SymmetryCase>(m, "SymmetryCase")
        .def(py::init([](unsigned n, unsigned r, unsigned w1, unsigned w2,
                         unsigned x, CheckMode mode, const py::object& q0,
                         const py::object& cfg) {
                 SymmetryCase c;
                 c.n = n;
                 c.r = r;
                 c.w1 = w1;
                 c.w2 = w2;
                 c.x = x;
                 c.mode = mode;
                 if (!q0.is_none()) c.q0 = rat_from_object(q0);
                 if (!cfg.is_none()) c.cfg = cfg.cast<IntegralConfig>();
                 c.validate();
                 return c;
             }),
             py::arg("n"), py::arg("r"), py::arg("w1"), py::arg("w2"),
             py::arg("x") = 0, py::arg("mode") = CheckMode::symbolic,
             py::arg("q0") = py::none(), py::arg("cfg") = py::none())
        .def_readonly("n", &SymmetryCase::n)
        .def_readonly("r", &SymmetryCase::r)
        .def_readonly("w1", &SymmetryCase::w1)
        .def_readonly("w2", &SymmetryCase::w2)
        .def_readonly("x", &SymmetryCase::x)
        .def_readonly("mode", &SymmetryCase::mode);

    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("case_", &SymmetryReport::c)
        .def_readonly("lhs", &SymmetryReport::lhs)
        .def_readonly("rhs", &SymmetryReport::rhs)
        .def_readonly("equal", &SymmetryReport::equal)
        .def_property_readonly("defect_valuation", &report_valuation)
        .def("__repr__", [](const SymmetryReport& rep) {
            return "<SymmetryReport equal=" + std::string(rep.equal ? "True" : "False") +
                   " lhs=\"" + rep.lhs + "\" rhs=\"" + rep.rhs + "\">";
        });

    m.def("q_int", &q_int, py::arg("m"));
    m.def("q_frac", &q_frac, py::arg("a"), py::arg("w"));
    m.def("classical_euler_numbers", &classical_euler_numbers, py::arg("n_max"),
          py::arg("r"));
    m.def("classical_euler_poly", &classical_euler_poly, py::arg("n"), py::arg("r"));
    m.def("q_euler_number", &q_euler_number, py::arg("n"), py::arg("r"));
    m.def(
        "q_euler_poly",
        [](unsigned n, unsigned r, unsigned a, unsigned w) {
            return q_euler_poly(n, r, a, w);
        },
        py::arg("n"), py::arg("r"), py::arg("a") = 0, py::arg("w") = 1);
    m.def("q_euler_poly_closed", &q_euler_poly_closed, py::arg("n"), py::arg("r"),
          py::arg("a"));

    m.def(
        "padic_reduce",
        [](const py::object& x, unsigned long p, unsigned N) {
            return padic_reduce(rat_from_object(x), p, N);
        },
        py::arg("x"), py::arg("p"), py::arg("N"));
    m.def("is_odd_prime", &is_odd_prime, py::arg("p"));
    m.def(
        "fermionic_riemann_sum",
        [](const std::function<py::object(unsigned long)>& f, unsigned long p,
           unsigned N) {
            return fermionic_riemann_sum(
                [&f](unsigned long x) { return rat_from_object(f(x)); }, p, N);
        },
        py::arg("f"), py::arg("p"), py::arg("N"));
    m.def(
        "shift_defect",
        [](const Poly& f, unsigned n, unsigned long p, unsigned N) {
            return valuation_to_py(shift_defect(f, n, p, N));
        },
        py::arg("f"), py::arg("n"), py::arg("p"), py::arg("N"));
    m.def(
        "tuple_count_by_sum",
        [](unsigned r, unsigned long M) {
            py::list out;
            for (const auto& c : tuple_count_by_sum(r, M)) out.append(mpz_to_int(c));
            return out;
        },
        py::arg("r"), py::arg("M"));
    m.def(
        "moment_sum",
        [](unsigned n, unsigned r, unsigned a, const py::object& q0, unsigned long p,
           unsigned N) { return moment_sum(n, r, a, rat_from_object(q0), p, N); },
        py::arg("n"), py::arg("r"), py::arg("a"), py::arg("q0"), py::arg("p"),
        py::arg("N"));
    m.def("multivariate_moment", &multivariate_moment, py::arg("n"), py::arg("r"),
          py::arg("a"), py::arg("cfg"), py::arg("N"));

    m.def("t_sum", &t_sum, py::arg("n"), py::arg("i"), py::arg("r"), py::arg("w"));
    m.def("t_sum_direct", &t_sum_direct, py::arg("n"), py::arg("i"), py::arg("r"),
          py::arg("w"));
    m.def("theorem3_side", &theorem3_side, py::arg("n"), py::arg("r"),
          py::arg("w_self"), py::arg("w_other"), py::arg("x") = 0);
    m.def("theorem4_side", &theorem4_side, py::arg("n"), py::arg("r"),
          py::arg("w_a"), py::arg("w_b"), py::arg("x") = 0);
    m.def("theorem3_check", &theorem3_check, py::arg("case"));
    m.def("theorem4_check", &theorem4_check, py::arg("case"));
    m.def("corollary2_padic_check", &corollary2_padic_check, py::arg("case"),
          py::arg("N"));
    m.def("theorem1_series_check", &theorem1_series_check, py::arg("n_max"),
          py::arg("r"), py::arg("w1"), py::arg("w2"), py::arg("x") = 0);
    m.def(
        "corollary2_side_sum",
        [](unsigned n, unsigned r, unsigned w_self, unsigned w_other, unsigned x,
           const py::object& q0, unsigned long p, unsigned N) {
            return corollary2_side_sum(n, r, w_self, w_other, x, rat_from_object(q0),
                                       p, N);
        },
        py::arg("n"), py::arg("r"), py::arg("w_self"), py::arg("w_other"),
        py::arg("x"), py::arg("q0"), py::arg("p"), py::arg("N"));

    py::register_exception<pole_error>(m, "PoleError");
    py::register_exception<not_p_adic_integer>(m, "NotPAdicInteger");
}
