#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filtint/families.hpp"
#include "filtint/gegenbauer_x.hpp"
#include "filtint/integrals.hpp"
#include "filtint/quadrature.hpp"

namespace py = pybind11;
using namespace filtint;

namespace {

py::object make_fraction(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.to_string());
}

Rational to_rational(py::handle h) {
  if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h))
    return Rational::from_string(py::cast<std::string>(py::str(h)));
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Rational::from_string(py::cast<std::string>(py::str(h.attr("numerator"))) + "/" +
                                 py::cast<std::string>(py::str(h.attr("denominator"))));
  throw py::type_error("parameter must be an int, a 'p/q' string or a Fraction");
}

Family build_family(const std::string& name, py::object a) {
  FamilyKind kind = parse_family(name);
  if (a.is_none()) return Family(kind);
  return Family(kind, to_rational(a));
}

py::tuple value_pair(const IntegralValue& v) {
  return py::make_tuple(make_fraction(v.coefficient()), tag_name(v.tag()));
}

py::list fractions_list(const std::vector<Rational>& cs) {
  py::list out;
  for (const auto& c : cs) out.append(make_fraction(c));
  return out;
}

py::list report_failures(const VerificationReport& rep) {
  py::list out;
  for (const auto& it : rep.items)
    if (!it.pass)
      out.append(rep.subject + ": " + it.name + ": expected " + it.expected + ", got " +
                 it.actual);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact filter integrals of classical orthogonal polynomial families";

  m.def("families", [] {
    return std::vector<std::string>{"legendre",   "hermite",  "chebyshev_t",
                                    "chebyshev_u", "laguerre", "gegenbauer"};
  });

  m.def(
      "gen",
      [](const std::string& family, int n, py::object a) {
        PolyFamily ctx(build_family(family, a));
        return fractions_list(ctx.generate(n).coefficients());
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none(),
      "Exact coefficients of p_n, ascending");

  m.def(
      "value_at_zero",
      [](const std::string& family, int n, py::object a) {
        return make_fraction(PolyFamily(build_family(family, a)).value_at_zero(n));
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none());

  m.def(
      "filter_integral",
      [](const std::string& family, int n, py::object a) {
        Family fam = build_family(family, a);
        return value_pair(filter_integral(fam, n));
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none(),
      "Exact filter integral by expanding p_n: (coefficient, tag)");

  m.def(
      "closed_form",
      [](const std::string& family, int n, py::object a) {
        return value_pair(closed_form(build_family(family, a), n));
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none());

  m.def(
      "closed_form_via_recurrence",
      [](const std::string& family, int n, py::object a) {
        return value_pair(closed_form_via_recurrence(build_family(family, a), n));
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none());

  m.def(
      "exact_value_as_float",
      [](const std::string& family, int n, py::object a) {
        Family fam = build_family(family, a);
        return numeric_value(closed_form(fam, n), fam);
      },
      py::arg("family"), py::arg("n"), py::arg("a") = py::none());

  m.def(
      "numeric_filter_integral",
      [](const std::string& family, int n, int points, py::object a) {
        return numeric_filter_integral(build_family(family, a), n, points);
      },
      py::arg("family"), py::arg("n"), py::arg("points"), py::arg("a") = py::none(),
      "Gauss-rule estimate of the filter integral");

  m.def(
      "verify_family",
      [](const std::string& family, int n_max, py::object a) {
        VerificationReport rep = verify_family(build_family(family, a), n_max);
        return py::make_tuple(rep.all_pass(), report_failures(rep));
      },
      py::arg("family"), py::arg("n_max"), py::arg("a") = py::none(),
      "(all_pass, failure descriptions)");

  m.def("laguerre_identities",
        [](int n) { return laguerre_identities(n).all_pass(); }, py::arg("n"));

  m.def(
      "xn_coefficients",
      [](int n) { return fractions_list(xn_closed(n).coefficients()); }, py::arg("n"),
      "Coefficients of X_n in the parameter, ascending");

  m.def(
      "xn_roots",
      [](int n) {
        py::list out;
        for (const auto& box : isolate_roots(xn_closed(n)))
          out.append(py::make_tuple(make_fraction(box.lo), make_fraction(box.hi)));
        return out;
      },
      py::arg("n"), "Isolating intervals (lo, hi] for the real roots of X_n");

  m.def(
      "xn_mod_prime",
      [](int n, std::uint64_t q) {
        return xn_mod_prime(n, PrimeModulus(q)).coefficients();
      },
      py::arg("n"), py::arg("q"));

  m.def(
      "xn_properties",
      [](int n, bool certify_roots) { return xn_properties(n, certify_roots).all_pass(); },
      py::arg("n"), py::arg("certify_roots") = false);

  m.def("wz_check", [](int n) { return wz_check(n).all_pass(); }, py::arg("n"));

  m.def(
      "interlacing",
      [](int n) { return interlacing_check(n).interlaced; }, py::arg("n"),
      "Whether the roots of X_n and X_{n+1} alternate");
}
