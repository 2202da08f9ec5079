#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qfgl/cli/commands.hpp"
#include "qfgl/cli/expr.hpp"
#include "qfgl/fgl.hpp"
#include "qfgl/lambda.hpp"
#include "qfgl/qcomb.hpp"
#include "qfgl/varieties.hpp"

namespace py = pybind11;
using namespace qfgl;

namespace {

Scalar parse_scalar(const std::string& text) { return cli::evaluate(cli::parse_expr(text)); }

std::vector<std::string> coefficients(const Series& s) {
  std::vector<std::string> out;
  for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].to_string());
  return out;
}

std::vector<std::string> coefficients(const QSeries& s) {
  std::vector<std::string> out;
  for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].get_str());
  return out;
}

py::dict report_dict(const std::string& suite, const VerificationReport& r) {
  py::list checks;
  for (const CheckResult& c : r.checks()) {
    py::dict d;
    d["name"] = c.name;
    d["order"] = c.order;
    d["passed"] = c.passed;
    d["failing_index"] = c.failing_index;
    d["detail"] = c.detail;
    checks.append(d);
  }
  py::dict out;
  out["suite"] = suite;
  out["passed"] = r.all_passed();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qfgl, m) {
  m.doc() = "Exact q-deformed formal group laws over Q(s), q = s^2";

  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);
  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init(&parse_scalar), py::arg("expression"))
      .def(py::init<long>())
      .def_static("q", &Scalar::q)
      .def_static("s", &Scalar::s)
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__hash__", [](const Scalar& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& a) { return "Scalar('" + a.to_string() + "')"; })
      .def("eval_q0", [](const Scalar& a) { return eval_q0(a).get_str(); })
      .def("eval_q1", [](const Scalar& a) { return eval_q1(a).get_str(); })
      .def("is_cromulent", [](const Scalar& a) { return is_cromulent(a); })
      .def("adams", &adams, py::arg("k"))
      .def("q_expand", [](const Scalar& a, int order) { return coefficients(q_expand(a, order)); }, py::arg("order"));

  m.def("q_int", &q_int);
  m.def("q_fact", &q_fact);
  m.def("q_binom", &q_binom);
  m.def("cp_image", &cp_image);
  m.def("log_chi", [](int order) { return coefficients(log_chi(order)); }, py::arg("order"));
  m.def("exp_chi", [](int order) { return coefficients(exp_chi(order)); }, py::arg("order"));
  m.def("euler_phi", [](int q_order) { return coefficients(euler_phi(q_order)); }, py::arg("q_order"));
  m.def("discriminant", [](int q_order) { return coefficients(discriminant(q_order)); }, py::arg("q_order"));
  m.def("thom_class", [](int q_order) { return coefficients(thom_class(q_order).value); }, py::arg("q_order"));
  m.def("lambda_k_verdict", [](int k, int q_order) { return to_string(lambda_k_closed(k, q_order).verdict); },
        py::arg("k"), py::arg("q_order"));
  m.def("cartier_selected", [](int t_order, int T_order) { return cartier_check(t_order, T_order).selected; },
        py::arg("t_order"), py::arg("T_order"));
  m.def(
      "hodge",
      [](const std::vector<int>& factors) {
        return hodge(product_of_projective_spaces(factors)).terms();
      },
      py::arg("factors"));
  m.def(
      "verify",
      [](const std::string& suite, int order, int t_order, int q_order) {
        const cli::SuiteRegistry registry = cli::SuiteRegistry::standard();
        const cli::Suite* s = registry.find(suite);
        if (s == nullptr) throw py::value_error("unknown suite: " + suite);
        cli::Command cmd;
        cmd.verb = "verify";
        cmd.target = suite;
        cmd.order = order;
        cmd.t_order = t_order;
        cmd.q_order = q_order;
        return report_dict(suite, (*s)(cmd));
      },
      py::arg("suite"), py::arg("order") = 10, py::arg("t_order") = 6, py::arg("q_order") = 30);
  m.def("suites", [] { return cli::SuiteRegistry::standard().names(); });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"qfgl"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
