#include "starsep/ring.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace starsep {

std::string Space::str() const {
  return (kind == SpaceKind::CPN ? std::string("cpn") : std::string("chn")) + "/" +
         std::to_string(dim);
}

namespace {

using Mono = std::pair<std::vector<int>, std::vector<int>>;

int total_degree(const Mono& m) {
  int d = 0;
  for (int e : m.first) d += e;
  for (int e : m.second) d += e;
  return d;
}

// Graded lex order; the leading monomial of B is then z^1 zb^1.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

using PolyMap = std::map<Mono, RationalH, GrlexLess>;

void poly_add(PolyMap& p, const Mono& m, const RationalH& c) {
  auto it = p.find(m);
  if (it == p.end()) {
    if (!c.is_zero()) p.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

// Exact division of the class polynomial by B = 1 + s*sum_i z_i zb_i.
// Returns the quotient when the remainder vanishes.
std::optional<PolyMap> try_divide_b(const PolyMap& poly, int n, int s) {
  PolyMap rem = poly;
  PolyMap quo;
  auto divisible = [](const Mono& m) { return m.first[0] >= 1 && m.second[0] >= 1; };
  while (true) {
    // grlex-largest monomial divisible by z^1 zb^1
    auto it = rem.rbegin();
    for (; it != rem.rend(); ++it)
      if (divisible(it->first)) break;
    if (it == rem.rend()) break;
    Mono u = it->first;
    u.first[0] -= 1;
    u.second[0] -= 1;
    RationalH c = it->second * RationalH(Rat(s));  // s^{-1} = s
    poly_add(quo, u, c);
    // rem -= c * u * B
    poly_add(rem, u, -c);
    for (int i = 0; i < n; ++i) {
      Mono v = u;
      v.first[static_cast<size_t>(i)] += 1;
      v.second[static_cast<size_t>(i)] += 1;
      poly_add(rem, v, -(c * RationalH(Rat(s))));
    }
  }
  if (!rem.empty()) return std::nullopt;
  return quo;
}

// Multinomial expansion of B^k, k >= 0, accumulated onto base*coeff.
void expand_b_power(PolyMap& out, const Mono& base, const RationalH& coeff, long long k,
                    int n, int s) {
  // enumerate exponent vectors (k_1..k_n) with sum <= k
  std::vector<int> e(static_cast<size_t>(n), 0);
  Int kfact = 1;
  for (long long i = 2; i <= k; ++i) kfact *= static_cast<long>(i);
  auto emit = [&]() {
    long long used = 0;
    Int denom = 1;
    for (int x : e) {
      used += x;
      for (int i = 2; i <= x; ++i) denom *= i;
    }
    for (long long i = 2; i <= k - used; ++i) denom *= static_cast<long>(i);
    Int count = kfact / denom;
    int sgn = (s < 0 && (used % 2)) ? -1 : 1;
    Mono m = base;
    for (int i = 0; i < n; ++i) {
      m.first[static_cast<size_t>(i)] += e[static_cast<size_t>(i)];
      m.second[static_cast<size_t>(i)] += e[static_cast<size_t>(i)];
    }
    poly_add(out, m, coeff * RationalH(Rat(count) * sgn));
  };
  // iterative odometer over e with sum <= k
  while (true) {
    emit();
    int i = 0;
    long long sum = 0;
    for (int x : e) sum += x;
    while (i < n) {
      if (sum < k) {
        e[static_cast<size_t>(i)] += 1;
        break;
      }
      sum -= e[static_cast<size_t>(i)];
      e[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

}  // namespace

RingElem RingElem::scalar(Space s, const RationalH& c) {
  RingElem e(s);
  TermKey key;
  key.za.assign(static_cast<size_t>(s.dim), 0);
  key.zb.assign(static_cast<size_t>(s.dim), 0);
  e.insert(key, c);
  return e;
}

RingElem RingElem::monomial(Space s, TermKey key, RationalH c) {
  if (static_cast<int>(key.za.size()) != s.dim || static_cast<int>(key.zb.size()) != s.dim)
    throw error("monomial multidegree length does not match space dimension");
  RingElem e(s);
  e.insert(key, c);
  e.normalize();
  return e;
}

RingElem RingElem::z(Space s, int k) {
  if (k < 1 || k > s.dim) throw error("coordinate index out of range");
  TermKey key;
  key.za.assign(static_cast<size_t>(s.dim), 0);
  key.zb.assign(static_cast<size_t>(s.dim), 0);
  key.za[static_cast<size_t>(k - 1)] = 1;
  RingElem e(s);
  e.insert(key, RationalH(Rat(1)));
  return e;
}

RingElem RingElem::zbar(Space s, int k) {
  if (k < 1 || k > s.dim) throw error("coordinate index out of range");
  TermKey key;
  key.za.assign(static_cast<size_t>(s.dim), 0);
  key.zb.assign(static_cast<size_t>(s.dim), 0);
  key.zb[static_cast<size_t>(k - 1)] = 1;
  RingElem e(s);
  e.insert(key, RationalH(Rat(1)));
  return e;
}

RingElem RingElem::bpow(Space s, long long p, long long q) {
  TermKey key;
  key.za.assign(static_cast<size_t>(s.dim), 0);
  key.zb.assign(static_cast<size_t>(s.dim), 0);
  key.p = p;
  key.q = q;
  RingElem e(s);
  e.insert(key, RationalH(Rat(1)));
  return e;
}

RingElem RingElem::lnb(Space s) {
  TermKey key;
  key.za.assign(static_cast<size_t>(s.dim), 0);
  key.zb.assign(static_cast<size_t>(s.dim), 0);
  key.r = 1;
  RingElem e(s);
  e.insert(key, RationalH(Rat(1)));
  return e;
}

void RingElem::insert(const TermKey& key, const RationalH& c) {
  if (c.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void RingElem::normalize() {
  if (t_.empty()) return;
  const int n = space_.dim;
  const int s = space_.sign();
  std::map<std::pair<long long, int>, std::vector<std::pair<TermKey, RationalH>>> classes;
  for (auto& [key, c] : t_) classes[{key.q, key.r}].push_back({key, c});
  std::map<TermKey, RationalH> out;
  for (auto& [qr, terms] : classes) {
    long long pmin = terms.front().first.p;
    for (auto& [key, c] : terms) pmin = std::min(pmin, key.p);
    PolyMap poly;
    for (auto& [key, c] : terms)
      expand_b_power(poly, Mono{key.za, key.zb}, c, key.p - pmin, n, s);
    while (!poly.empty()) {
      auto quo = try_divide_b(poly, n, s);
      if (!quo) break;
      poly = std::move(*quo);
      ++pmin;
    }
    for (auto& [mono, c] : poly) {
      TermKey key;
      key.za = mono.first;
      key.zb = mono.second;
      key.p = pmin;
      key.q = qr.first;
      key.r = qr.second;
      out.emplace(std::move(key), c);
    }
  }
  t_ = std::move(out);
}

RingElem RingElem::operator-() const {
  RingElem r(*this);
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
  if (!(space_ == o.space_)) throw error("mixed spaces in ring arithmetic");
  RingElem r(*this);
  for (auto& [k, c] : o.t_) r.insert(k, c);
  r.normalize();
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::sum(Space s, const std::vector<RingElem>& parts) {
  RingElem r(s);
  for (auto& p : parts) {
    if (!(p.space_ == s)) throw error("mixed spaces in ring arithmetic");
    for (auto& [k, c] : p.t_) r.insert(k, c);
  }
  r.normalize();
  return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
  if (!(space_ == o.space_)) throw error("mixed spaces in ring arithmetic");
  RingElem r(space_);
  for (auto& [ka, ca] : t_) {
    for (auto& [kb, cb] : o.t_) {
      TermKey key;
      key.za.resize(static_cast<size_t>(space_.dim));
      key.zb.resize(static_cast<size_t>(space_.dim));
      for (int i = 0; i < space_.dim; ++i) {
        key.za[static_cast<size_t>(i)] = ka.za[static_cast<size_t>(i)] + kb.za[static_cast<size_t>(i)];
        key.zb[static_cast<size_t>(i)] = ka.zb[static_cast<size_t>(i)] + kb.zb[static_cast<size_t>(i)];
      }
      key.p = ka.p + kb.p;
      key.q = ka.q + kb.q;
      key.r = ka.r + kb.r;
      r.insert(key, ca * cb);
    }
  }
  r.normalize();
  return r;
}

RingElem RingElem::scaled(const RationalH& c) const {
  if (c.is_zero()) return RingElem(space_);
  RingElem r(*this);
  for (auto& [k, v] : r.t_) v *= c;
  return r;
}

RingElem RingElem::pow(unsigned e) const {
  RingElem r = one(space_);
  RingElem base(*this);
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

RingElem operator*(const RationalH& c, const RingElem& f) { return f.scaled(c); }

bool RingElem::is_h_free() const {
  for (auto& [k, c] : t_)
    if (!c.is_constant()) return false;
  return true;
}

bool RingElem::has_formal_exponent() const {
  for (auto& [k, c] : t_)
    if (k.q != 0) return true;
  return false;
}

bool RingElem::has_log() const {
  for (auto& [k, c] : t_)
    if (k.r != 0) return true;
  return false;
}

Series<RingElem> RingElem::h_decompose(int order) const {
  if (has_formal_exponent())
    throw error("h-grading undefined on B^(q/h) factors; use exact Fock or numeric mode");
  Series<RingElem> out(order, RingElem::zero(space_));
  for (auto& [key, c] : t_) {
    auto coeffs = c.taylor(order);
    for (int d = 0; d <= order; ++d) {
      if (coeffs[static_cast<size_t>(d)] == 0) continue;
      out[d].insert(key, RationalH(coeffs[static_cast<size_t>(d)]));
    }
  }
  // an order slice of a canonical element may itself be divisible by B
  for (int d = 0; d <= order; ++d) out[d].normalize();
  return out;
}

RingElem RingElem::collapse_exact(long long L) const {
  if (L <= 0) throw error("collapse requires L >= 1");
  RingElem r(space_);
  Rat h0(1, static_cast<unsigned long>(L));
  for (auto& [key, c] : t_) {
    TermKey k2 = key;
    k2.p = key.p + key.q * L;
    k2.q = 0;
    r.insert(k2, RationalH(c.eval_at(h0)));
  }
  r.normalize();
  return r;
}

std::complex<double> RingElem::eval_numeric(const std::vector<std::complex<double>>& z,
                                            double h0) const {
  if (static_cast<int>(z.size()) != space_.dim)
    throw error("point dimension does not match space");
  if (h0 <= 0) throw error("eval_numeric requires h0 > 0");
  double zz = 0;
  for (auto& c : z) zz += std::norm(c);
  if (space_.kind == SpaceKind::CHN && zz >= 1.0)
    throw error("CH^N point outside the unit ball");
  double b = 1.0 + space_.sign() * zz;
  if (b <= 0.0) throw error("base factor B <= 0 at evaluation point");
  std::complex<double> total(0.0, 0.0);
  for (auto& [key, c] : t_) {
    std::complex<double> v(c.eval(h0), 0.0);
    for (int i = 0; i < space_.dim; ++i) {
      for (int e = 0; e < key.za[static_cast<size_t>(i)]; ++e) v *= z[static_cast<size_t>(i)];
      for (int e = 0; e < key.zb[static_cast<size_t>(i)]; ++e) v *= std::conj(z[static_cast<size_t>(i)]);
    }
    double expo = static_cast<double>(key.p) + static_cast<double>(key.q) / h0;
    v *= std::pow(b, expo);
    for (int e = 0; e < key.r; ++e) v *= std::log(b);
    total += v;
  }
  return total;
}

std::string RingElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, c] : t_) {
    std::string cs = c.str();
    bool negated = false;
    if (c.is_constant() && c.as_constant() < 0) {
      cs = (-c).str();
      negated = true;
    }
    if (first) {
      if (negated) os << "-";
    } else {
      os << (negated ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < space_.dim; ++i) {
      int e = key.za[static_cast<size_t>(i)];
      if (e > 0) {
        std::string f = "z[" + std::to_string(i + 1) + "]";
        if (e > 1) f += "^" + std::to_string(e);
        factors.push_back(f);
      }
    }
    for (int i = 0; i < space_.dim; ++i) {
      int e = key.zb[static_cast<size_t>(i)];
      if (e > 0) {
        std::string f = "zb[" + std::to_string(i + 1) + "]";
        if (e > 1) f += "^" + std::to_string(e);
        factors.push_back(f);
      }
    }
    if (key.p != 0 || key.q != 0)
      factors.push_back("B(" + std::to_string(key.p) + "," + std::to_string(key.q) + ")");
    if (key.r > 0) {
      std::string f = "lnB";
      if (key.r > 1) f += "^" + std::to_string(key.r);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

RingElem d_hol(int k, const RingElem& f) {
  const Space& s = f.space();
  if (k < 1 || k > s.dim) throw error("coordinate index out of range");
  const int sg = s.sign();
  std::vector<RingElem> parts;
  for (auto& [key, c] : f.terms()) {
    int a = key.za[static_cast<size_t>(k - 1)];
    if (a > 0) {
      TermKey k2 = key;
      k2.za[static_cast<size_t>(k - 1)] -= 1;
      parts.push_back(RingElem::monomial(s, k2, c * RationalH(Rat(a))));
    }
    if (key.p != 0 || key.q != 0) {
      // d_k B^(p+q/h) = (p + q/h) s zb^k B^(p-1+q/h)
      TermKey k2 = key;
      k2.zb[static_cast<size_t>(k - 1)] += 1;
      k2.p -= 1;
      RationalH e(Poly(std::vector<Rat>{Rat(static_cast<long>(key.q)), Rat(static_cast<long>(key.p))}), Poly::h());
      parts.push_back(RingElem::monomial(s, k2, c * e * RationalH(Rat(sg))));
    }
    if (key.r > 0) {
      TermKey k2 = key;
      k2.zb[static_cast<size_t>(k - 1)] += 1;
      k2.p -= 1;
      k2.r -= 1;
      parts.push_back(RingElem::monomial(s, k2, c * RationalH(Rat(key.r * sg))));
    }
  }
  return RingElem::sum(s, parts);
}

RingElem d_antihol(int k, const RingElem& f) {
  const Space& s = f.space();
  if (k < 1 || k > s.dim) throw error("coordinate index out of range");
  const int sg = s.sign();
  std::vector<RingElem> parts;
  for (auto& [key, c] : f.terms()) {
    int a = key.zb[static_cast<size_t>(k - 1)];
    if (a > 0) {
      TermKey k2 = key;
      k2.zb[static_cast<size_t>(k - 1)] -= 1;
      parts.push_back(RingElem::monomial(s, k2, c * RationalH(Rat(a))));
    }
    if (key.p != 0 || key.q != 0) {
      TermKey k2 = key;
      k2.za[static_cast<size_t>(k - 1)] += 1;
      k2.p -= 1;
      RationalH e(Poly(std::vector<Rat>{Rat(static_cast<long>(key.q)), Rat(static_cast<long>(key.p))}), Poly::h());
      parts.push_back(RingElem::monomial(s, k2, c * e * RationalH(Rat(sg))));
    }
    if (key.r > 0) {
      TermKey k2 = key;
      k2.za[static_cast<size_t>(k - 1)] += 1;
      k2.p -= 1;
      k2.r -= 1;
      parts.push_back(RingElem::monomial(s, k2, c * RationalH(Rat(key.r * sg))));
    }
  }
  return RingElem::sum(s, parts);
}

RingElem apply_D_bar(int l, const RingElem& f) {
  const Space& s = f.space();
  if (l < 1 || l > s.dim) throw error("coordinate index out of range");
  std::vector<RingElem> parts;
  parts.push_back(d_hol(l, f));
  for (int k = 1; k <= s.dim; ++k)
    parts.push_back(RationalH(Rat(s.sign())) *
                    (RingElem::zbar(s, l) * RingElem::z(s, k) * d_hol(k, f)));
  return RingElem::bpow(s, 1, 0) * RingElem::sum(s, parts);
}

RingElem apply_D(int l, const RingElem& f) {
  const Space& s = f.space();
  if (l < 1 || l > s.dim) throw error("coordinate index out of range");
  std::vector<RingElem> parts;
  parts.push_back(d_antihol(l, f));
  for (int k = 1; k <= s.dim; ++k)
    parts.push_back(RationalH(Rat(s.sign())) *
                    (RingElem::z(s, l) * RingElem::zbar(s, k) * d_antihol(k, f)));
  return RingElem::bpow(s, 1, 0) * RingElem::sum(s, parts);
}

RingElem metric_lower(Space s, int i, int j) { return d_hol(i, d_antihol(j, phi(s))); }

RingElem metric_upper(Space s, int l, int k) {
  RingElem r = RingElem::z(s, k) * RingElem::zbar(s, l);
  r = r.scaled(RationalH(Rat(s.sign())));
  if (l == k) r = r + RingElem::one(s);
  return RingElem::bpow(s, 1, 0) * r;
}

RingElem vacuum(Space s) { return RingElem::bpow(s, 0, -s.sign()); }

RingElem phi(Space s) { return RingElem::lnb(s).scaled(RationalH(Rat(s.sign()))); }

RingElem dphi(Space s, int k) {
  return RingElem::zbar(s, k) * RingElem::bpow(s, -1, 0);
}

RingElem dbarphi(Space s, int k) {
  return RingElem::z(s, k) * RingElem::bpow(s, -1, 0);
}

RingElem poisson_antisym(const RingElem& f, const RingElem& g) {
  if (!(f.space() == g.space())) throw error("mixed spaces in Poisson bracket");
  const Space& s = f.space();
  RingElem acc(s);
  for (int l = 1; l <= s.dim; ++l) {
    for (int k = 1; k <= s.dim; ++k) {
      RingElem term = d_antihol(l, f) * d_hol(k, g) - d_antihol(l, g) * d_hol(k, f);
      acc = acc + metric_upper(s, l, k) * term;
    }
  }
  return acc;
}

RingElem norm_sq(Space s) {
  RingElem acc(s);
  for (int k = 1; k <= s.dim; ++k) acc = acc + RingElem::z(s, k) * RingElem::zbar(s, k);
  return acc;
}

}  // namespace starsep
