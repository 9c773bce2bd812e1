#include "starsep/oracle.hpp"

#include <algorithm>
#include <map>

namespace starsep {

namespace {

Rat pochhammer_int(int a, int k) {
  Rat r(1);
  for (int j = 0; j < k; ++j) r *= Rat(a + j);
  return r;
}

std::vector<std::vector<int>> multisets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Rat perm_count(const std::vector<int>& ms) {
  Rat num = factorial(static_cast<int>(ms.size()));
  size_t i = 0;
  while (i < ms.size()) {
    size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    num /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return num;
}

}  // namespace

XSeries hyp_expand(const HypParams& p, int order) {
  if (p.c1 == 0) throw error("hyp_expand requires c1 != 0");
  if (p.arg_sign != 1 && p.arg_sign != -1) throw error("argument sign must be +1 or -1");
  XSeries out(order, Poly());
  for (int k = 0; k <= order; ++k) {
    // (a)_k (b)_k / k! * (arg_sign)^k * x^k * h^k / prod_{j<k}((c0+j) h + c1)
    Rat num = pochhammer_int(p.a, k) * pochhammer_int(p.b, k) / factorial(k);
    if (p.arg_sign < 0 && k % 2) num = -num;
    Poly den{Rat(1)};
    for (int j = 0; j < k; ++j)
      den = den * Poly(std::vector<Rat>{Rat(p.c1), Rat(p.c0 + j)});
    RationalH weight(Poly::h().pow(static_cast<unsigned>(k)) * Poly(num), den);
    auto coeffs = weight.taylor(order);
    std::vector<Rat> xmono(static_cast<size_t>(k) + 1, Rat(0));
    xmono.back() = 1;
    Poly xk(xmono);
    for (int n = k; n <= order; ++n) {
      if (coeffs[static_cast<size_t>(n)] == 0) continue;
      out[n] = out[n] + xk * Poly(coeffs[static_cast<size_t>(n)]);
    }
  }
  return out;
}

XSeries bordemann_F(int kind, int order) {
  if (kind != 1 && kind != 2) throw error("bordemann_F kind must be 1 or 2");
  XSeries out(order, Poly());
  Poly one_plus_x(std::vector<Rat>{Rat(1), Rat(1)});
  for (int m = 0; m <= order; ++m) {
    Poly acc;
    for (int s = 0; s <= m; ++s) {
      Rat weight_s(0);
      for (int k = 1; k <= s + 1; ++k) {
        // s! k^m (-1)^(m+1-k) / ((s+1-k)! (k-1)!), with (s+1)! for kind 2
        Rat num = kind == 1 ? factorial(s) : factorial(s + 1);
        Rat kpow(1);
        for (int t = 0; t < m; ++t) kpow *= k;
        Rat term = num * kpow / (factorial(s + 1 - k) * factorial(k - 1));
        if ((m + 1 - k) % 2 != 0) term = -term;
        weight_s += term;
      }
      if (weight_s != 0) acc = acc + one_plus_x.pow(static_cast<unsigned>(s)) * Poly(weight_s);
    }
    out[m] = acc;
  }
  return out;
}

RingElem substitute_norm_sq(Space s, const Poly& xpoly) {
  RingElem acc(s);
  RingElem x = norm_sq(s);
  RingElem xpow = RingElem::one(s);
  for (int d = 0; d <= xpoly.degree(); ++d) {
    Rat c = xpoly.coeff(d);
    if (c != 0) acc = acc + xpow.scaled(RationalH(c));
    if (d < xpoly.degree()) xpow = xpow * x;
  }
  return acc;
}

HSeries scalar_convolve(const HSeries& s, const RationalH& c) {
  const int order = s.order();
  HSeries out = hseries_zero(s.zero_elem().space(), order);
  auto w = c.taylor(order);
  for (int a = 0; a <= order; ++a) {
    if (w[static_cast<size_t>(a)] == 0) continue;
    RationalH wa(w[static_cast<size_t>(a)]);
    for (int n = 0; a + n <= order; ++n)
      out[a + n] = out[a + n] + s[n].scaled(wa);
  }
  return out;
}

XSeries scalar_convolve(const XSeries& s, const RationalH& c) {
  const int order = s.order();
  XSeries out(order, Poly());
  auto w = c.taylor(order);
  for (int a = 0; a <= order; ++a) {
    if (w[static_cast<size_t>(a)] == 0) continue;
    Poly wa(w[static_cast<size_t>(a)]);
    for (int n = 0; a + n <= order; ++n) out[a + n] = out[a + n] + s[n] * wa;
  }
  return out;
}

HSeries closed_form_product(Space s, int i, int j, int order) {
  if (i < 1 || i > s.dim || j < 1 || j > s.dim) throw error("index out of range");
  const int sg = s.sign();
  // CP^N: zb z + h delta B 2F1(1,1;1-1/h;-x) + h/(1-h) zb z B 2F1(1,2;2-1/h;-x)
  // CH^N: zb z + h delta B 2F1(1,1;1+1/h;+x) - h/(1+h) zb z B 2F1(1,2;2+1/h;+x)
  XSeries f_delta = hyp_expand({1, 1, 1, -sg, -sg}, order);
  XSeries f_zz = hyp_expand({1, 2, 2, -sg, -sg}, order);
  RingElem b = RingElem::bpow(s, 1, 0);
  RingElem zzbar = RingElem::zbar(s, i) * RingElem::z(s, j);
  HSeries out = hseries_zero(s, order);
  out[0] = zzbar;
  if (i == j) {
    HSeries t1 = hseries_zero(s, order);
    for (int n = 0; n <= order; ++n) t1[n] = b * substitute_norm_sq(s, f_delta[n]);
    t1 = scalar_convolve(t1, RationalH::h());
    out = out + t1;
  }
  HSeries t2 = hseries_zero(s, order);
  for (int n = 0; n <= order; ++n) t2[n] = b * zzbar * substitute_norm_sq(s, f_zz[n]);
  // +- h / (1 -+ h)
  RationalH pref(Poly(std::vector<Rat>{Rat(0), Rat(sg)}),
                 Poly(std::vector<Rat>{Rat(1), Rat(-sg)}));
  t2 = scalar_convolve(t2, pref);
  return out + t2;
}

HSeries closed_form_product_cp1(int order) {
  Space s = cpn(1);
  XSeries f = hyp_expand({1, 2, 1, -1, -1}, order);
  RingElem b2 = RingElem::bpow(s, 2, 0);
  HSeries out = hseries_zero(s, order);
  out[0] = norm_sq(s);
  HSeries t = hseries_zero(s, order);
  for (int n = 0; n <= order; ++n) t[n] = b2 * substitute_norm_sq(s, f[n]);
  return out + scalar_convolve(t, RationalH::h());
}

RingElem vacuum_series_partial(Space s, int l, bool left_zbar, int term_cap,
                               int drop_term) {
  if (l < 1 || l > s.dim) throw error("index out of range");
  RingElem vac = vacuum(s);
  std::vector<RingElem> parts;
  parts.push_back((left_zbar ? RingElem::zbar(s, l) : RingElem::z(s, l)) * vac);
  std::map<std::vector<int>, RingElem> dstr, pprod;
  dstr.emplace(std::vector<int>{},
               left_zbar ? apply_D_bar(l, vac) : apply_D(l, vac));
  pprod.emplace(std::vector<int>{}, RingElem::one(s));
  for (int m = 1; m <= term_cap; ++m) {
    if (m >= 2) {
      for (auto& j : multisets(s.dim, m - 1)) {
        if (dstr.find(j) == dstr.end()) {
          std::vector<int> parent(j.begin(), j.end() - 1);
          int idx = j.back();
          dstr.emplace(j, left_zbar ? apply_D_bar(idx, dstr.at(parent))
                                    : apply_D(idx, dstr.at(parent)));
          pprod.emplace(j, pprod.at(parent) *
                               (left_zbar ? dbarphi(s, idx) : dphi(s, idx)));
        }
      }
    }
    if (m == drop_term) continue;
    RationalH w = s.kind == SpaceKind::CPN ? alpha(m) : beta(m);
    if (s.kind == SpaceKind::CHN && m % 2 == 0) w = -w;
    for (auto& j : multisets(s.dim, m - 1)) {
      RingElem contrib = pprod.at(j) * dstr.at(j);
      parts.push_back(contrib.scaled(w * RationalH(perm_count(j))));
    }
  }
  return RingElem::sum(s, parts);
}

NumericCheck numeric_residual(const std::string& identity,
                              const std::vector<std::vector<std::complex<double>>>& points,
                              double h0, int term_cap, double tolerance, int drop_term) {
  if (points.empty()) throw error("numeric_residual requires at least one point");
  const int dim = static_cast<int>(points.front().size());
  Space s{SpaceKind::CPN, dim};
  bool left_zbar = true;
  if (identity == "cp-zbar-vac") {
    s = cpn(dim);
  } else if (identity == "cp-vac-z") {
    s = cpn(dim);
    left_zbar = false;
  } else if (identity == "ch-zbar-vac") {
    s = chn(dim);
  } else if (identity == "ch-vac-z") {
    s = chn(dim);
    left_zbar = false;
  } else {
    throw error("unknown numeric identity: " + identity);
  }
  if (h0 <= 0) throw error("numeric_residual requires h0 > 0");
  RingElem partial = vacuum_series_partial(s, 1, left_zbar, term_cap, drop_term);
  NumericCheck out;
  out.identity = identity;
  out.h0 = h0;
  out.term_cap = term_cap;
  out.tolerance = tolerance;
  out.points = static_cast<int>(points.size());
  for (auto& pt : points) {
    if (static_cast<int>(pt.size()) != dim)
      throw error("inconsistent point dimensions");
    double r = std::abs(partial.eval_numeric(pt, h0));
    out.max_residual = std::max(out.max_residual, r);
  }
  out.pass = out.max_residual < tolerance;
  return out;
}

}  // namespace starsep
