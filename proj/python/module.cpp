#include <pybind11/complex.h>
#include <pybind11/eval.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starsep/fock.hpp"
#include "starsep/oracle.hpp"
#include "starsep/parse.hpp"
#include "starsep/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace starsep;

namespace {

Space make_space(const std::string& name, int dim) {
  if (dim < 1) throw error("dim must be at least 1");
  if (name == "cpn") return cpn(dim);
  if (name == "chn") return chn(dim);
  throw error("space must be 'cpn' or 'chn'");
}

py::int_ big_int(const Int& v) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.get_str()));
}

struct PyExpr {
  RingElem elem;
};

std::vector<std::string> series_strings(const HSeries& s) {
  std::vector<std::string> out;
  for (int n = 0; n <= s.order(); ++n) out.push_back(s[n].str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact star products with separation of variables on CP^N and CH^N";

  py::register_exception<error>(m, "StarsepError");

  py::class_<PyExpr>(m, "Expr")
      .def("__str__", [](const PyExpr& e) { return e.elem.str(); })
      .def("__repr__", [](const PyExpr& e) { return "Expr(" + e.elem.str() + ")"; })
      .def("__eq__", [](const PyExpr& a, const PyExpr& b) { return a.elem == b.elem; })
      .def("__add__", [](const PyExpr& a, const PyExpr& b) { return PyExpr{a.elem + b.elem}; })
      .def("__sub__", [](const PyExpr& a, const PyExpr& b) { return PyExpr{a.elem - b.elem}; })
      .def("__mul__", [](const PyExpr& a, const PyExpr& b) { return PyExpr{a.elem * b.elem}; })
      .def("__neg__", [](const PyExpr& a) { return PyExpr{-a.elem}; })
      .def("is_zero", [](const PyExpr& e) { return e.elem.is_zero(); })
      .def("space", [](const PyExpr& e) { return e.elem.space().str(); })
      .def(
          "eval",
          [](const PyExpr& e, const std::vector<std::complex<double>>& z, double h0) {
            return e.elem.eval_numeric(z, h0);
          },
          "z"_a, "h0"_a, "numeric evaluation at a point");

  m.def(
      "parse",
      [](const std::string& text, const std::string& space, int dim) {
        return PyExpr{parse_expr(text, make_space(space, dim))};
      },
      "text"_a, "space"_a = "cpn", "dim"_a = 1,
      "parse(text, space, dim) -> Expr in the closed function ring");

  m.def(
      "stirling2", [](int n, int k) { return big_int(stirling2(n, k)); }, "n"_a, "k"_a,
      "Stirling number of the second kind");
  m.def(
      "coeff_a", [](int n, int mm) { return big_int(coeff_a(n, mm)); }, "n"_a, "m"_a,
      "operator-series coefficient a_m^(n)");
  m.def(
      "alpha", [](int mm) { return alpha(mm).str(); }, "m"_a,
      "closed form of the generating function alpha_m(h)");
  m.def(
      "beta", [](int mm) { return beta(mm).str(); }, "m"_a);
  m.def(
      "alpha_series",
      [](int mm, int order) {
        std::vector<std::string> out;
        for (auto& c : alpha(mm).taylor(order)) out.push_back(rat_str(c));
        return out;
      },
      "m"_a, "order"_a, "Taylor coefficients of alpha_m at h = 0");
  m.def(
      "c_covariant",
      [](int n, const std::string& space) {
        return c_covariant(n, space == "chn" ? SpaceKind::CHN : SpaceKind::CPN).str();
      },
      "n"_a, "space"_a = "cpn");

  m.def(
      "star_trunc",
      [](const PyExpr& f, const PyExpr& g, int order) {
        return series_strings(star_trunc(f.elem, g.elem, order));
      },
      "f"_a, "g"_a, "order"_a,
      "f * g mod h^(order+1); list of h-order coefficients as strings");
  m.def(
      "star_covariant",
      [](const PyExpr& f, const PyExpr& g, int order) {
        return series_strings(star_covariant(f.elem, g.elem, order));
      },
      "f"_a, "g"_a, "order"_a);
  m.def(
      "star_exact_fock",
      [](const PyExpr& f, const PyExpr& g, long long L) {
        return PyExpr{star_exact_fock(f.elem, g.elem, L)};
      },
      "f"_a, "g"_a, "L"_a, "exact product at h = 1/L on M_L (CP^N)");
  m.def(
      "lstar_dphi",
      [](int k, const PyExpr& f) { return PyExpr{lstar_dphi(k, f.elem)}; }, "k"_a, "f"_a);
  m.def(
      "rstar_dbarphi",
      [](int k, const PyExpr& f) { return PyExpr{rstar_dbarphi(k, f.elem)}; }, "k"_a, "f"_a);

  m.def(
      "hyp_series",
      [](int a, int b, int c0, int c1, int sign, int order) {
        std::vector<std::string> out;
        XSeries s = hyp_expand({a, b, c0, c1, sign}, order);
        for (int n = 0; n <= order; ++n) out.push_back(s[n].str("x"));
        return out;
      },
      "a"_a, "b"_a, "c0"_a, "c1"_a, "sign"_a, "order"_a,
      "2F1(a, b; c0 + c1/h; sign*x) as h-series of x-polynomials");
  m.def(
      "bordemann_series",
      [](int kind, int order) {
        std::vector<std::string> out;
        XSeries s = bordemann_F(kind, order);
        for (int n = 0; n <= order; ++n) out.push_back(s[n].str("x"));
        return out;
      },
      "kind"_a, "order"_a);

  m.def(
      "verify",
      [](const std::string& suite, const std::string& space, int dim, int order, long long L,
         std::uint64_t seed, int count) {
        VerifyOptions opt;
        opt.space = space;
        opt.dim = dim;
        opt.order = order;
        opt.L = L;
        opt.seed = seed;
        opt.count = count;
        SuiteResult res = run_suite(suite, opt);
        return py::make_tuple(res.pass(), res.to_json().dump(2));
      },
      "suite"_a, "space"_a = "both", "dim"_a = 2, "order"_a = 6, "L"_a = 3, "seed"_a = 1,
      "count"_a = 20, "run a verification suite; returns (passed, report_json)");
  m.def("suites", []() { return suite_names(); });
}
