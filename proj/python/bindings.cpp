#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "orthodontia/families.hpp"
#include "orthodontia/json_io.hpp"
#include "orthodontia/lascoux_basis.hpp"
#include "orthodontia/pipe_dreams.hpp"
#include "orthodontia/verify.hpp"

namespace py = pybind11;
using namespace orthodontia;

namespace {

// Exact integers cross the boundary as Python ints through their decimal text.
py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(v.str()); }

Permutation perm(const std::string& w) { return parse_permutation(w); }

py::dict expansion_dict(const LascouxExpansion& e) {
    py::dict out;
    for (const auto& [alpha, c] : e.coeffs) {
        py::tuple key(alpha.size());
        for (int i = 0; i < alpha.size(); ++i) key[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)];
        out[key] = to_py(c);
    }
    return out;
}

py::dict check_dict(const PositivityCheck& check) {
    py::dict out;
    out["polynomial"] = check.polynomial;
    out["expansion"] = expansion_dict(check.expansion);
    out["d0"] = check.expansion.baseline_degree;
    out["positive"] = check.verdict.positive;
    return out;
}

}  // namespace

PYBIND11_MODULE(_orthodontia, m) {
    m.doc() = "Exact double Schubert, Grothendieck, Lascoux and key polynomials";

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<int, int>(), py::arg("n"), py::arg("m") = 0)
        .def_property_readonly("n", &Polynomial::n)
        .def_property_readonly("m", &Polynomial::m)
        .def("is_zero", &Polynomial::is_zero)
        .def("substitute_y", [](const Polynomial& p, long long v) { return p.substitute_y(v); }, py::arg("value"))
        .def("negate_y", &Polynomial::negate_y)
        .def("lowest_degree_part", &Polynomial::lowest_degree_part)
        .def("latex", &Polynomial::to_latex)
        .def("to_json", [](const Polynomial& p) { return to_json(p).dump(); })
        .def_static("from_json",
                    [](const std::string& text) {
                        try {
                            return polynomial_from_json(nlohmann::json::parse(text));
                        } catch (const nlohmann::json::exception& e) {
                            throw std::invalid_argument(e.what());
                        }
                    })
        .def_static("x", &Polynomial::x, py::arg("n"), py::arg("m"), py::arg("i"))
        .def_static("y", &Polynomial::y, py::arg("n"), py::arg("m"), py::arg("j"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

    m.def("double_grothendieck", [](const std::string& w) { return double_grothendieck(perm(w)); }, py::arg("w"));
    m.def("double_schubert", [](const std::string& w) { return double_schubert(perm(w)); }, py::arg("w"));
    m.def("grothendieck", [](const std::string& w) { return grothendieck(perm(w)); }, py::arg("w"));
    m.def("schubert", [](const std::string& w) { return schubert(perm(w)); }, py::arg("w"));
    m.def(
        "weight_sum",
        [](const std::string& w, bool signed_sum) {
            return weight_sum(perm(w), signed_sum ? PipeDreamSign::signed_by_excess : PipeDreamSign::unsigned_literal);
        },
        py::arg("w"), py::arg("signed") = true);
    m.def("pipe_dream_count", [](const std::string& w) { return enumerate_pd(perm(w)).size(); }, py::arg("w"));
    m.def("lascoux", [](const std::vector<int>& a) { return lascoux(Composition(a)); }, py::arg("alpha"));
    m.def("key", [](const std::vector<int>& a) { return key(Composition(a)); }, py::arg("alpha"));
    m.def(
        "script_G",
        [](const std::string& diagram, bool barred) {
            return script_G(parse_diagram(diagram), barred ? InnerOmega::barred : InnerOmega::unbarred);
        },
        py::arg("diagram"), py::arg("barred") = true);
    m.def("script_S", [](const std::string& diagram) { return script_S(parse_diagram(diagram)); }, py::arg("diagram"));
    m.def("rothe", [](const std::string& w) { return rothe(perm(w)).to_string(); }, py::arg("w"));

    m.def("lascoux_expand", [](const Polynomial& f) { return expansion_dict(lascoux_expand(f)); }, py::arg("f"));
    m.def("graded_positive", [](const Polynomial& f) { return check_dict(check_positivity(f)); }, py::arg("f"));
    m.def(
        "theorem12_check",
        [](const std::string& diagram, bool waive) { return check_dict(theorem12_check(parse_diagram(diagram), waive)); },
        py::arg("diagram"), py::arg("waive_inclusion") = false);

    m.def(
        "verify",
        [](const std::string& suite, int nmax) {
            const auto report = run_verify(suite, nmax);
            return py::make_tuple(report.checks.size(), report.failed());
        },
        py::arg("suite"), py::arg("nmax"));
    m.def("verify_suites", &verify_suites);
    m.def(
        "ambiguity_report", [](int nmax) { return render_ambiguity_report(ambiguity_findings(nmax), nmax); },
        py::arg("nmax") = 5);
}
