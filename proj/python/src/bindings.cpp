#include <mzvkit/series.hpp>
#include <mzvkit/suite.hpp>
#include <mzvkit/zeta_poly.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mzvkit;

namespace {

PrecisionContext make_context(int digits, double tol) {
  PrecisionContext ctx;
  ctx.decimal_digits = digits;
  ctx.target_tolerance = tol;
  ctx.validate();
  return ctx;
}

py::dict index_dict(const MultiIndex& k) {
  py::dict d;
  d["parts"] = k.parts;
  d["strict"] = k.strict;
  d["sign"] = k.sign;
  d["canonical"] = k.to_string();
  d["weight"] = k.weight();
  return d;
}

Params to_params(const py::dict& d) {
  Params p;
  for (const auto& [key, value] : d) {
    const auto name = py::cast<std::string>(key);
    if (py::isinstance<py::str>(value)) {
      const auto s = py::cast<std::string>(value);
      if (s.find_first_not_of("-0123456789/") == std::string::npos) {
        p[name] = Rational(s);
      } else {
        p[name] = s;
      }
    } else if (py::isinstance<py::int_>(value)) {
      p[name] = Rational(py::cast<long>(value));
    } else {
      // fractions.Fraction and friends
      p[name] = Rational(Integer(py::cast<std::string>(py::str(value.attr("numerator")))),
                         Integer(py::cast<std::string>(py::str(value.attr("denominator")))));
    }
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_mzvkit, m) {
  m.doc() = "Multiple zeta values, Euler sums and identity checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_ArithmeticError);
  py::register_exception<UnknownCheckError>(m, "UnknownCheckError", PyExc_KeyError);

  m.def("parse_index", [](const std::string& s) { return index_dict(parse_index(s)); },
        py::arg("text"));
  m.def("dual_index", [](const std::string& s) { return index_dict(dual_index(parse_index(s))); },
        py::arg("text"));

  m.def(
      "eval_mpl",
      [](const std::string& s, int digits, double tol, const std::string& method, long max_terms) {
        const auto ctx = make_context(digits, tol);
        EvalOptions opts;
        opts.method = parse_method(method);
        opts.max_terms = max_terms;
        const MultiIndex k = parse_index(s);
        SeriesValue v;
        {
          py::gil_scoped_release release;
          v = eval_mpl(k, ctx, opts);
        }
        const PrecisionGuard guard(ctx);
        py::dict d;
        d["index"] = k.to_string();
        d["value"] = v.value.value.str(digits, std::ios_base::scientific);
        d["err"] = v.value.err.str(3, std::ios_base::scientific);
        d["terms"] = v.terms_used;
        d["method"] = v.method;
        return d;
      },
      py::arg("index"), py::arg("digits") = 40, py::arg("tol") = 1e-12, py::arg("method") = "auto",
      py::arg("max_terms") = EvalOptions{}.max_terms);

  m.def("bernoulli", [](int n) { return to_string(bernoulli(n)); }, py::arg("n"));
  m.def(
      "gamma_coeffs",
      [](int order) {
        std::vector<std::string> out;
        for (const auto& c : gamma_ratio_coeffs(order).coeffs) out.push_back(c.to_string());
        return out;
      },
      py::arg("order"));
  m.def(
      "theorem3_coefficient",
      [](int s, const std::string& variant) {
        return to_string(theorem3_coefficient(s, parse_theorem3_variant(variant)));
      },
      py::arg("s"), py::arg("variant") = "proof_chain");

  m.def("check_ids", [] {
    std::vector<std::string> out;
    for (const auto& spec : registry()) out.push_back(spec.check_id);
    return out;
  });
  m.def(
      "run_check_json",
      [](const std::string& id, const py::dict& params, int digits, double tol) {
        const auto ctx = make_context(digits, tol);
        const Params p = to_params(params);
        IdentityCheckResult r;
        {
          py::gil_scoped_release release;
          r = run_check(id, p, ctx);
        }
        return to_json(r).dump();
      },
      py::arg("check_id"), py::arg("params"), py::arg("digits") = 40, py::arg("tol") = 1e-12);
  m.def(
      "run_suite_json",
      [](const std::string& filter, int digits, double tol) {
        const auto ctx = make_context(digits, tol);
        SuiteReport rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(filter, ctx);
        }
        return report_json(rep.results).dump();
      },
      py::arg("filter") = "all", py::arg("digits") = 40, py::arg("tol") = 1e-12);
}
