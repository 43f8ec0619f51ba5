#include "oddzeta/diophantine.hpp"
#include "oddzeta/equidist.hpp"
#include "oddzeta/errors.hpp"
#include "oddzeta/expr.hpp"
#include "oddzeta/zeta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace oddzeta;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them in Fraction.
std::string rational_text(const BigInt& p, const BigInt& q) { return BigRational(p, q).to_string(); }

py::dict zeta(int s, int digits, const std::string& method) {
  const Digits d{digits};
  ZetaResult r;
  if (method == "direct") {
    r = zeta_direct(s, d);
  } else if (method == "euler") {
    if (s % 2 != 0) {
      throw std::invalid_argument("method 'euler' needs an even s");
    }
    r = zeta_even_exact(s / 2, d);
  } else if (method == "lerch") {
    r = zeta_odd_lerch(s, d);
  } else if (method == "ramanujan") {
    if (s != 5) {
      throw std::invalid_argument("method 'ramanujan' is only defined for s = 5");
    }
    r = zeta5_ramanujan(d);
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  py::dict out;
  out["value"] = render_decimal(r.value, d);
  out["error_bound"] = render_radius(r.value);
  out["method"] = std::string(to_string(r.method));
  out["truncation"] = r.truncation;
  out["precision_bits"] = r.precision.value;
  return out;
}

std::string coeff(const std::string& kind, unsigned long n) {
  if (kind == "bernoulli") {
    return bernoulli(n).to_string();
  }
  if (kind == "euler") {
    return euler_number(n).get_str();
  }
  if (kind == "even-zeta") {
    return even_zeta_coeff(n).to_string();
  }
  if (kind == "lerch") {
    return lerch_leading_coeff(n).to_string();
  }
  if (kind == "beta") {
    return dirichlet_beta_coeff(n).to_string();
  }
  throw std::invalid_argument("unknown coefficient kind '" + kind + "'");
}

py::dict split(int s, int digits, std::optional<std::string> a) {
  std::optional<BigRational> supplied;
  if (a) {
    supplied = BigRational::parse(*a);
  }
  const PiSplit r = pi_split(s, Digits{digits}, supplied);
  py::dict out;
  out["a"] = r.a.to_string();
  out["b"] = render_decimal(r.b, Digits{digits});
  out["b_error_bound"] = render_radius(r.b);
  out["degenerate"] = r.degenerate;
  return out;
}

py::dict continued_fraction(const std::string& expr, std::size_t terms, int digits) {
  const HReal value = evaluate_expr(expr, bits_for_digits(Digits{digits}));
  const ContinuedFraction cf = cf_expand(value, terms, expr);
  py::list quotients;
  py::list convergents;
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
    quotients.append(py::int_(py::str(cf.quotients[i].get_str())));
    convergents.append(rational_text(cf.convergents[i].p, cf.convergents[i].q));
  }
  py::dict out;
  out["quotients"] = quotients;
  out["convergents"] = convergents;
  out["certified_terms"] = cf.certified_terms;
  return out;
}

py::list check_dioph(const std::string& expr, std::size_t max_n, int digits) {
  const HReal value = evaluate_expr(expr, bits_for_digits(Digits{digits}));
  const ContinuedFraction cf = cf_expand(value, max_n + 2, expr);
  py::list out;
  for (const InequalityCheck& c : check_two_sided_inequality(cf, value)) {
    py::dict row;
    row["n"] = c.n;
    row["convergent"] = rational_text(c.p, c.q);
    row["residual"] = c.residual_estimate;
    row["passed"] = c.passed();
    out.append(row);
  }
  return out;
}

py::dict weyl(const std::string& t_expr, std::int64_t x, int digits) {
  const WeylReport r = weyl_average(evaluate_expr(t_expr, bits_for_digits(Digits{digits})), x);
  py::dict out;
  out["x"] = r.x;
  out["brute"] = r.brute.real.to_double();
  out["brute_error_bound"] = r.brute.real.radius_double();
  out["closed"] = r.closed.to_double();
  out["normalized"] = r.normalized.to_double();
  out["bound"] = r.bound.to_double();
  out["brute_matches_closed"] = r.brute_matches_closed;
  out["within_bound"] = r.within_bound;
  return out;
}

py::dict probe(const std::string& alpha_expr, std::int64_t k, int digits) {
  const Bits bits = bits_for_digits(Digits{digits});
  const HReal alpha = evaluate_expr(alpha_expr, bits);
  const SineProbe p = sine_probe(alpha, k, cf_expand(alpha / pi(bits), 5000));
  py::dict out;
  out["sin"] = p.sin_value.to_double();
  out["q_next"] = py::int_(py::str(p.q_next.get_str()));
  out["lower_bound"] = p.convergent_lower_bound.to_double();
  out["concavity_holds"] = p.concavity_holds;
  return out;
}

py::dict derive(int at, int digits) {
  if (at != -2 && at != -4) {
    throw std::invalid_argument("at must be -2 or -4");
  }
  const DerivativeReport r = derivative_report(-at / 2, Digits{digits});
  py::dict out;
  out["closed_form"] = render_decimal(r.closed_form, Digits{digits});
  out["numeric_matches_closed_form"] = r.numeric_matches_closed_form;
  out["published_formula"] = r.published_formula;
  out["numeric_matches_published"] = r.numeric_matches_published;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "High-precision zeta constants and Diophantine checks";

  static py::exception<InsufficientPrecision> insufficient(m, "InsufficientPrecision", PyExc_ArithmeticError);
  static py::exception<NearSingularity> singular(m, "NearSingularity", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const InsufficientPrecision& e) {
      PyErr_SetString(insufficient.ptr(), e.what());
    } catch (const NearSingularity& e) {
      PyErr_SetString(singular.ptr(), e.what());
    }
  });

  m.def("zeta", &zeta, py::arg("s"), py::arg("digits") = 50, py::arg("method") = "direct");
  m.def("coeff", &coeff, py::arg("kind"), py::arg("n"));
  m.def("split", &split, py::arg("s"), py::arg("digits") = 50, py::arg("a") = py::none());
  m.def("continued_fraction", &continued_fraction, py::arg("expr"), py::arg("terms") = 20, py::arg("digits") = 50);
  m.def("check_dioph", &check_dioph, py::arg("expr"), py::arg("max_n") = 40, py::arg("digits") = 100);
  m.def("weyl", &weyl, py::arg("t"), py::arg("x"), py::arg("digits") = 50);
  m.def("probe", &probe, py::arg("alpha"), py::arg("k"), py::arg("digits") = 50);
  m.def("derive", &derive, py::arg("at"), py::arg("digits") = 30);
  m.def("evaluate", [](const std::string& expr, int digits) {
    return render_decimal(evaluate_expr(expr, bits_for_digits(Digits{digits})), Digits{digits});
  }, py::arg("expr"), py::arg("digits") = 50);
}
