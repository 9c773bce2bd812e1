#include "starsep/star.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace starsep {

namespace {

// All multisets of given size drawn from {1..n}, as sorted index vectors.
std::vector<std::vector<int>> multisets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // nondecreasing sequences
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

// Number of distinct orderings of a sorted multiset.
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

std::vector<std::vector<int>> sequences_of(std::vector<int> ms) {
  std::vector<std::vector<int>> out;
  std::sort(ms.begin(), ms.end());
  do {
    out.push_back(ms);
  } while (std::next_permutation(ms.begin(), ms.end()));
  return out;
}

// Weight series for the m-th operator block of L_{zbar} / R_z: alpha_m on
// CP^N, (-1)^(m-1) beta_m on CH^N. Coefficients vanish below order m.
HTrunc operator_weights(SpaceKind kind, int m, int order) {
  RationalH w = kind == SpaceKind::CPN ? alpha(m) : beta(m);
  HTrunc t = expand_series(w, order);
  if (kind == SpaceKind::CHN && m % 2 == 0)
    for (int n = 0; n <= order; ++n) t[n] = -t[n];
  return t;
}

enum class Side { Left, Right };

// The order-raising part of L_{zbar^l} (Side::Left) or R_{z^l} (Side::Right)
// applied to an h-free element: sum_{m>=1} w_m(h) (dPhi factors) D-string.
HSeries star_op_raise(Side side, int l, const RingElem& g, int order) {
  const Space& s = g.space();
  HSeries out = hseries_zero(s, order);
  if (order < 1 || g.is_zero()) return out;
  // D-string and dPhi-product caches over multisets, grown level by level
  std::map<std::vector<int>, RingElem> dstr, pprod;
  RingElem base = side == Side::Left ? apply_D_bar(l, g) : apply_D(l, g);
  dstr.emplace(std::vector<int>{}, base);
  pprod.emplace(std::vector<int>{}, RingElem::one(s));
  for (int m = 1; m <= order; ++m) {
    if (m >= 2) {
      for (auto& j : multisets(s.dim, m - 1)) {
        if (dstr.find(j) == dstr.end()) {
          std::vector<int> parent(j.begin(), j.end() - 1);
          int idx = j.back();
          dstr.emplace(j, side == Side::Left ? apply_D_bar(idx, dstr.at(parent))
                                             : apply_D(idx, dstr.at(parent)));
          pprod.emplace(j, pprod.at(parent) *
                               (side == Side::Left ? dbarphi(s, idx) : dphi(s, idx)));
        }
      }
    }
    std::vector<RingElem> contribs;
    for (auto& j : multisets(s.dim, m - 1))
      contribs.push_back((pprod.at(j) * dstr.at(j)).scaled(RationalH(perm_count(j))));
    RingElem t_m = RingElem::sum(s, contribs);
    if (t_m.is_zero()) continue;
    HTrunc w = operator_weights(s.kind, m, order);
    for (int n = m; n <= order; ++n)
      if (w[n] != 0) out[n] = out[n] + t_m.scaled(RationalH(w[n]));
  }
  return out;
}

void require_truncatable(const RingElem& f) {
  if (f.has_formal_exponent())
    throw error(
        "truncated mode requires q = 0 exponents; use exact Fock mode (h = 1/L) "
        "or the numeric oracle for B^(q/h) factors");
}

HSeries op_raise_series(Side side, int l, const HSeries& g) {
  const int order = g.order();
  HSeries out = hseries_zero(g.zero_elem().space(), order);
  for (int b = 0; b <= order; ++b) {
    if (g[b].is_zero()) continue;
    HSeries part = star_op_raise(side, l, g[b], order - b);
    for (int n = 1; n + b <= order; ++n) out[n + b] = out[n + b] + part[n];
  }
  return out;
}

// Multi-index enumeration for the operator expansion of L_f / R_g.
std::vector<std::vector<int>> multi_indices(int n, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    int sum = 0;
    for (int x : cur) sum += x;
    while (i < n) {
      if (sum < max_total) {
        cur[static_cast<size_t>(i)] += 1;
        break;
      }
      sum -= cur[static_cast<size_t>(i)];
      cur[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

Rat multi_factorial(const std::vector<int>& a) {
  Rat f(1);
  for (int x : a) f *= factorial(x);
  return f;
}

int multi_total(const std::vector<int>& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

HSeries star_series_impl(Side side, const HSeries& f, const HSeries& g) {
  const Space space = f.zero_elem().space();
  if (!(space == g.zero_elem().space())) throw error("mixed spaces in star product");
  const int order = std::min(f.order(), g.order());
  HSeries out = hseries_zero(space, order);
  // Side::Left: f*g = sum_alpha (1/alpha!) (dbar^alpha f) (L_zbar - zbar)^alpha g
  // Side::Right: f*g = sum_alpha (1/alpha!) (d^alpha g) (R_z - z)^alpha f
  const HSeries& opd = side == Side::Left ? g : f;    // operators act here
  const HSeries& diff = side == Side::Left ? f : g;   // derivatives act here
  for (int b = 0; b <= order; ++b) {
    if (opd[b].is_zero()) continue;
    const int rest = order - b;
    auto alphas = multi_indices(space.dim, rest);
    // W_alpha = (op - coord)^alpha applied to opd[b], truncated at h^rest
    std::map<std::vector<int>, HSeries> w;
    {
      HSeries w0 = hseries_zero(space, rest);
      w0[0] = opd[b];
      w.emplace(std::vector<int>(static_cast<size_t>(space.dim), 0), std::move(w0));
    }
    for (auto& a : alphas) {
      int t = multi_total(a);
      if (t == 0) continue;
      std::vector<int> parent = a;
      int l = 0;
      for (int i = 0; i < space.dim; ++i)
        if (a[static_cast<size_t>(i)] > 0) {
          l = i + 1;
          parent[static_cast<size_t>(i)] -= 1;
          break;
        }
      w.emplace(a, op_raise_series(side, l, w.at(parent)));
    }
    for (auto& a : alphas) {
      int t = multi_total(a);
      Rat inv_fact = 1 / multi_factorial(a);
      const HSeries& wa = w.at(a);
      for (int d = 0; d + b + t <= order; ++d) {
        RingElem der = diff[d];
        if (der.is_zero()) continue;
        for (int i = 0; i < space.dim; ++i)
          for (int rep = 0; rep < a[static_cast<size_t>(i)]; ++rep)
            der = side == Side::Left ? d_antihol(i + 1, der) : d_hol(i + 1, der);
        if (der.is_zero()) continue;
        der = der.scaled(RationalH(inv_fact));
        for (int j = t; j + b + d <= order; ++j)
          out[b + d + j] = out[b + d + j] + der * wa[j];
      }
    }
  }
  return out;
}

// Pairing tensors of the covariant form: C[J][K] = sum over orderings of the
// multisets J, K of prod_i g_{j_i kbar_i}. Cached per (space, rank).
struct PairingKey {
  SpaceKind kind;
  int dim;
  int rank;
  auto operator<=>(const PairingKey&) const = default;
};

const std::map<std::pair<std::vector<int>, std::vector<int>>, RingElem>& pairing_tensor(
    Space s, int rank) {
  static std::mutex mu;
  static std::map<PairingKey, std::map<std::pair<std::vector<int>, std::vector<int>>, RingElem>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  PairingKey key{s.kind, s.dim, rank};
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  std::map<std::pair<std::vector<int>, std::vector<int>>, RingElem> tensors;
  auto msets = multisets(s.dim, rank);
  std::map<std::pair<int, int>, RingElem> g;
  for (int j = 1; j <= s.dim; ++j)
    for (int k = 1; k <= s.dim; ++k) g.emplace(std::make_pair(j, k), metric_lower(s, j, k));
  for (auto& jm : msets) {
    for (auto& km : msets) {
      RingElem acc(s);
      for (auto& kseq : sequences_of(km)) {
        RingElem prod = RingElem::one(s);
        for (int i = 0; i < rank; ++i)
          prod = prod * g.at({jm[static_cast<size_t>(i)], kseq[static_cast<size_t>(i)]});
        acc = acc + prod;
      }
      acc = acc.scaled(RationalH(perm_count(jm)));
      tensors.emplace(std::make_pair(jm, km), acc);
    }
  }
  auto [it, ok] = cache.emplace(key, std::move(tensors));
  return it->second;
}

// D-string tensors D^J f over multisets of size <= max_rank.
std::map<std::vector<int>, RingElem> d_tensors(const RingElem& f, int max_rank, bool barred) {
  std::map<std::vector<int>, RingElem> out;
  out.emplace(std::vector<int>{}, f);
  for (int t = 1; t <= max_rank; ++t) {
    for (auto& j : multisets(f.space().dim, t)) {
      std::vector<int> parent(j.begin(), j.end() - 1);
      out.emplace(j, barred ? apply_D_bar(j.back(), out.at(parent))
                            : apply_D(j.back(), out.at(parent)));
    }
  }
  return out;
}

HSeries star_covariant_core(const RingElem& f, const RingElem& g, int order) {
  const Space& s = f.space();
  HSeries out = hseries_zero(s, order);
  auto df = d_tensors(f, order, /*barred=*/false);
  auto dg = d_tensors(g, order, /*barred=*/true);
  for (int n = 0; n <= order; ++n) {
    RingElem t_n(s);
    if (n == 0) {
      t_n = f * g;
    } else {
      const auto& pair_n = pairing_tensor(s, n);
      std::vector<RingElem> contribs;
      for (auto& jm : multisets(s.dim, n)) {
        const RingElem& fj = df.at(jm);
        if (fj.is_zero()) continue;
        for (auto& km : multisets(s.dim, n)) {
          const RingElem& gk = dg.at(km);
          if (gk.is_zero()) continue;
          contribs.push_back(pair_n.at({jm, km}) * fj * gk);
        }
      }
      t_n = RingElem::sum(s, contribs);
    }
    if (t_n.is_zero()) continue;
    HTrunc w = expand_series(c_covariant(n, s.kind), order);
    for (int v = n; v <= order; ++v)
      if (w[v] != 0) out[v] = out[v] + t_n.scaled(RationalH(w[v]));
  }
  return out;
}

std::string fock_violation(const RingElem& f, long long L) {
  for (auto& [key, c] : f.terms()) {
    if (key.r != 0) return "logarithmic term present";
    if (key.q != 0) return "formal exponent survived collapse";
    if (key.p < -L) return "B-exponent below -L";
    int da = 0, db = 0;
    for (int e : key.za) da += e;
    for (int e : key.zb) db += e;
    if (da > -key.p || db > -key.p) return "monomial degree exceeds L-window";
  }
  return "";
}

}  // namespace

HSeries hseries_zero(Space s, int order) { return HSeries(order, RingElem::zero(s)); }

RingElem lstar_dphi(int k, const RingElem& f) {
  const Space& s = f.space();
  return RationalH::h() * d_hol(k, f) + dphi(s, k) * f;
}

RingElem rstar_dbarphi(int k, const RingElem& f) {
  const Space& s = f.space();
  return RationalH::h() * d_antihol(k, f) + dbarphi(s, k) * f;
}

HSeries lstar_zbar_trunc(int l, const RingElem& g, int order) {
  require_truncatable(g);
  return lstar_zbar_series(l, g.h_decompose(order));
}

HSeries rstar_z_trunc(int l, const RingElem& f, int order) {
  require_truncatable(f);
  return rstar_z_series(l, f.h_decompose(order));
}

HSeries lstar_zbar_series(int l, const HSeries& g) {
  HSeries out = op_raise_series(Side::Left, l, g);
  const Space& s = g.zero_elem().space();
  for (int n = 0; n <= g.order(); ++n)
    out[n] = out[n] + RingElem::zbar(s, l) * g[n];
  return out;
}

HSeries rstar_z_series(int l, const HSeries& f) {
  HSeries out = op_raise_series(Side::Right, l, f);
  const Space& s = f.zero_elem().space();
  for (int n = 0; n <= f.order(); ++n)
    out[n] = out[n] + RingElem::z(s, l) * f[n];
  return out;
}

HSeries star_trunc(const RingElem& f, const RingElem& g, int order) {
  require_truncatable(f);
  require_truncatable(g);
  return star_series_impl(Side::Left, f.h_decompose(order), g.h_decompose(order));
}

HSeries star_trunc_right(const RingElem& f, const RingElem& g, int order) {
  require_truncatable(f);
  require_truncatable(g);
  return star_series_impl(Side::Right, f.h_decompose(order), g.h_decompose(order));
}

HSeries star_series(const HSeries& f, const HSeries& g) {
  return star_series_impl(Side::Left, f, g);
}

HSeries star_series_right(const HSeries& f, const HSeries& g) {
  return star_series_impl(Side::Right, f, g);
}

HSeries star_covariant(const RingElem& f, const RingElem& g, int order) {
  require_truncatable(f);
  require_truncatable(g);
  const Space space = f.space();
  if (!(space == g.space())) throw error("mixed spaces in star product");
  HSeries fd = f.h_decompose(order), gd = g.h_decompose(order);
  HSeries out = hseries_zero(space, order);
  for (int a = 0; a <= order; ++a) {
    if (fd[a].is_zero()) continue;
    for (int b = 0; a + b <= order; ++b) {
      if (gd[b].is_zero()) continue;
      HSeries part = star_covariant_core(fd[a], gd[b], order - a - b);
      for (int j = 0; j + a + b <= order; ++j)
        out[a + b + j] = out[a + b + j] + part[j];
    }
  }
  return out;
}

bool in_fock_space(const RingElem& f, long long L) { return fock_violation(f, L).empty(); }


RingElem star_exact_fock(const RingElem& f, const RingElem& g, long long L) {
  const Space& s = f.space();
  if (s.kind != SpaceKind::CPN)
    throw error("exact Fock mode is defined for CP^N only");
  if (!(s == g.space())) throw error("mixed spaces in star product");
  if (L < 1) throw error("exact Fock mode requires L >= 1");
  RingElem fe = f.collapse_exact(L);
  RingElem ge = g.collapse_exact(L);
  for (auto* e : {&fe, &ge}) {
    std::string why = fock_violation(*e, L);
    if (!why.empty()) throw error("factor outside M_L: " + why);
  }
  auto df = d_tensors(fe, static_cast<int>(L) + 1, /*barred=*/false);
  auto dg = d_tensors(ge, static_cast<int>(L) + 1, /*barred=*/true);
  for (auto& jm : multisets(s.dim, static_cast<int>(L) + 1)) {
    if (!df.at(jm).is_zero() || !dg.at(jm).is_zero())
      throw error("factor outside M_L: D-string of rank L+1 does not vanish");
  }
  Rat h0(1, static_cast<unsigned long>(L));
  RingElem acc = fe * ge;
  for (int n = 1; n <= static_cast<int>(L); ++n) {
    Rat cn = c_covariant(n, SpaceKind::CPN).eval_at(h0);
    const auto& pair_n = pairing_tensor(s, n);
    std::vector<RingElem> contribs;
    for (auto& jm : multisets(s.dim, n)) {
      const RingElem& fj = df.at(jm);
      if (fj.is_zero()) continue;
      for (auto& km : multisets(s.dim, n)) {
        const RingElem& gk = dg.at(km);
        if (gk.is_zero()) continue;
        contribs.push_back(pair_n.at({jm, km}) * fj * gk);
      }
    }
    acc = acc + RingElem::sum(s, contribs).scaled(RationalH(cn));
  }
  std::string why = fock_violation(acc, L);
  if (!why.empty()) throw error("exact Fock product left M_L: " + why);
  return acc;
}

KarabegovResult verify_karabegov(int l, int order, const std::vector<RingElem>& samples) {
  KarabegovResult res;
  for (size_t si = 0; si < samples.size(); ++si) {
    const RingElem& g = samples[si];
    const Space& s = g.space();
    HSeries gs = g.h_decompose(order);
    for (int i = 1; i <= s.dim; ++i) {
      auto apply_r = [&](const HSeries& u) {
        HSeries out = hseries_zero(s, u.order());
        for (int n = 0; n <= u.order(); ++n) {
          out[n] = dbarphi(s, i) * u[n];
          if (n >= 1) out[n] = out[n] + d_antihol(i, u[n - 1]);
        }
        return out;
      };
      HSeries lhs = lstar_zbar_series(l, apply_r(gs));
      HSeries rhs = apply_r(lstar_zbar_series(l, gs));
      for (int n = 0; n <= order; ++n) {
        RingElem diff = lhs[n] - rhs[n];
        if (!diff.is_zero()) {
          res.pass = false;
          std::ostringstream os;
          os << "sample " << si << ", ibar = " << i << ", order h^" << n << ": "
             << diff.str();
          res.witness = os.str();
          return res;
        }
      }
    }
  }
  return res;
}

std::vector<RingElem> sample_basket(Space s) {
  int j = std::min(2, s.dim);
  std::vector<RingElem> basket;
  basket.push_back(RingElem::one(s));
  basket.push_back(RingElem::z(s, 1));
  basket.push_back(RingElem::zbar(s, j));
  basket.push_back(RingElem::z(s, 1) * RingElem::zbar(s, 1));
  basket.push_back(RingElem::bpow(s, 1, 0));
  basket.push_back(s.dim >= 2 ? RingElem::z(s, 1) * RingElem::z(s, 2)
                              : RingElem::z(s, 1).pow(2));
  basket.push_back(dphi(s, 1));
  basket.push_back(RingElem::z(s, j) * RingElem::bpow(s, -1, 0));
  return basket;
}

}  // namespace starsep
