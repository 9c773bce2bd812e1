#include "starsep/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace starsep {

namespace {

// u(m) = (1 - sign*m*h)/h; the ladder radicands are built from these.
RationalH ladder_u(int sign, int m) {
  return RationalH(Poly(std::vector<Rat>{Rat(1), Rat(-sign * m)}), Poly::h());
}

RationalH h_rh() { return RationalH::h(); }

// v = u^2 * w with w squarefree, by trial division (values stay small here).
void int_sqrt_part(Int v, Int& u, Int& w) {
  u = 1;
  w = 1;
  if (v == 0) return;
  Int p = 2;
  while (p * p <= v) {
    int e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      v /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) u *= p;
    if (e % 2) w *= p;
    p += 1;
  }
  w *= v;  // leftover prime
}

// f = lc(f) * prod a_i^i with monic squarefree pairwise-coprime a_i (Yun).
std::vector<Poly> yun_squarefree(const Poly& f_in) {
  Poly f = f_in.monic();
  if (f.degree() <= 0) return {};
  Poly fp = f.derivative();
  Poly g = Poly::gcd(f, fp);
  if (g.degree() == 0) return {f};
  Poly w, y, r;
  Poly::divmod(f, g, w, r);
  Poly::divmod(fp, g, y, r);
  Poly z = y - w.derivative();
  std::vector<Poly> out;
  while (w.degree() > 0) {
    Poly a = Poly::gcd(w, z);
    if (a.is_zero()) a = Poly(Rat(1));
    out.push_back(a);
    Poly q;
    Poly::divmod(w, a, q, r);
    w = q;
    Poly::divmod(z, a, q, r);
    z = q - w.derivative();
  }
  return out;
}

// P = content * primitive with primitive an integer-coefficient polynomial of
// positive leading coefficient.
void primitive_int(const Poly& p, Rat& content, Poly& primitive) {
  if (p.is_zero()) {
    content = 0;
    primitive = Poly();
    return;
  }
  Int lcm_den = 1;
  for (const Rat& c : p.coeffs()) lcm_den = lcm(lcm_den, Int(c.get_den()));
  Int gcd_num = 0;
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * Rat(lcm_den);
    gcd_num = gcd(gcd_num, Int(scaled.get_num()));
  }
  Rat factor = Rat(gcd_num) / Rat(lcm_den);
  if (p.leading() < 0) factor = -factor;
  content = factor;
  std::vector<Rat> coeffs;
  for (const Rat& c : p.coeffs()) coeffs.push_back(c / factor);
  primitive = Poly(std::move(coeffs));
}

std::vector<int> multiset_minus(const std::vector<int>& ms, int k) {
  std::vector<int> out;
  bool removed = false;
  for (int x : ms) {
    if (!removed && x == k) {
      removed = true;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

std::vector<int> multiset_plus(const std::vector<int>& ms, int k) {
  std::vector<int> out = ms;
  out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicity(const std::vector<int>& ms, int k) {
  return static_cast<int>(std::count(ms.begin(), ms.end(), k));
}

int sign_at_zero_plus(const Poly& p) {
  if (p.is_zero()) return 0;
  return p.coeff(p.order_at_zero()) < 0 ? -1 : 1;
}

// Sign of the function as h -> 0+ (sign of the lowest Taylor coefficient).
int sign_at_zero_plus(const RationalH& f) {
  if (f.is_zero()) return 0;
  return sign_at_zero_plus(f.num()) * sign_at_zero_plus(f.den());
}

// Radical ladder coefficient for one generator acting on a multiset of the
// given size (m for left actions, n for right ones). Raising coefficients
// use u(cnt), lowering ones u(cnt-1).
Radical ladder_coeff(Generator::Kind kind, Generator::Side side, int sign, int cnt) {
  const bool left = side == Generator::Side::Left;
  switch (kind) {
    case Generator::Kind::Z:
      if (left)  // raise upper
        return Radical::sqrt_of(RationalH(Rat(cnt + 1)) / ladder_u(sign, cnt));
      // lower the lower side
      return Radical::sqrt_of(RationalH(Rat(1)) /
                              (RationalH(Rat(cnt)) * ladder_u(sign, cnt - 1)));
    case Generator::Kind::DPhi:
      if (left)  // lower upper
        return Radical::sqrt_of(ladder_u(sign, cnt - 1) / RationalH(Rat(cnt))) * h_rh();
      // raise lower
      return Radical::sqrt_of(RationalH(Rat(cnt + 1)) * ladder_u(sign, cnt)) * h_rh();
    case Generator::Kind::Zbar:
      if (left)  // lower upper
        return Radical::sqrt_of(RationalH(Rat(1)) /
                                (RationalH(Rat(cnt)) * ladder_u(sign, cnt - 1)));
      // raise lower
      return Radical::sqrt_of(RationalH(Rat(cnt + 1)) / ladder_u(sign, cnt));
    case Generator::Kind::DbarPhi:
      if (left)  // raise upper
        return Radical::sqrt_of(RationalH(Rat(cnt + 1)) * ladder_u(sign, cnt)) * h_rh();
      // lower the lower side
      return Radical::sqrt_of(ladder_u(sign, cnt - 1) / RationalH(Rat(cnt))) * h_rh();
  }
  throw error("unreachable generator kind");
}

// Unnormalized ground truth: stripping the basis normalization leaves every
// coefficient in Q(h).
RationalH ladder_coeff_unnorm(Generator::Kind kind, Generator::Side side, int sign,
                              int cnt) {
  const bool left = side == Generator::Side::Left;
  switch (kind) {
    case Generator::Kind::Z:
      if (left) return RationalH(Rat(1));
      return RationalH(Rat(1)) / ladder_u(sign, cnt - 1);
    case Generator::Kind::DPhi:
      if (left) return h_rh();
      return h_rh() * ladder_u(sign, cnt);
    case Generator::Kind::Zbar:
      if (left) return RationalH(Rat(1)) / ladder_u(sign, cnt - 1);
      return RationalH(Rat(1));
    case Generator::Kind::DbarPhi:
      if (left) return h_rh() * ladder_u(sign, cnt);
      return h_rh();
  }
  throw error("unreachable generator kind");
}

bool generator_raises(Generator::Kind kind, Generator::Side side) {
  const bool left = side == Generator::Side::Left;
  switch (kind) {
    case Generator::Kind::Z:
      return left;
    case Generator::Kind::DPhi:
      return !left;
    case Generator::Kind::Zbar:
      return !left;
    case Generator::Kind::DbarPhi:
      return left;
  }
  throw error("unreachable generator kind");
}

template <class C, class CoeffFn>
FockVec<C> ladder_apply_impl(const Generator& g, const FockVec<C>& u, CoeffFn&& coeff_fn) {
  const Space& s = u.space;
  if (g.index < 1 || g.index > s.dim) throw error("generator index out of range");
  const bool on_upper = g.side == Generator::Side::Left;
  const bool raise = generator_raises(g.kind, g.side);
  FockVec<C> out(s);
  for (auto& [idx, c] : u.coeffs) {
    const std::vector<int>& ms = on_upper ? idx.upper : idx.lower;
    int cnt = static_cast<int>(ms.size());
    if (raise) {
      C coeff = coeff_fn(g.kind, g.side, s.sign(), cnt);
      std::vector<int> target = multiset_plus(ms, g.index);
      FockIndex t = on_upper ? FockIndex(target, idx.lower) : FockIndex(idx.upper, target);
      out.add(t, c * coeff);
    } else {
      int mult = multiplicity(ms, g.index);
      if (mult == 0) continue;  // empty annihilation sum
      C coeff = coeff_fn(g.kind, g.side, s.sign(), cnt);
      std::vector<int> target = multiset_minus(ms, g.index);
      FockIndex t = on_upper ? FockIndex(target, idx.lower) : FockIndex(idx.upper, target);
      out.add(t, c * coeff * RationalH(Rat(mult)));
    }
  }
  return out;
}

nlohmann::json structure_constants_json(SpaceKind kind, int dim, int max_size,
                                        const std::string& hbar) {
  Space s{kind, dim};
  nlohmann::json constants = nlohmann::json::object();
  auto basis = fock_basis(dim, max_size, max_size);
  for (auto& a : basis) {
    for (auto& b : basis) {
      FockVector prod = fock_mul(FockVector::basis(s, a), FockVector::basis(s, b));
      if (prod.is_zero()) continue;
      nlohmann::json entries = nlohmann::json::array();
      for (auto& [idx, c] : prod.coeffs) {
        if (!c.is_rational()) throw error("normalized structure constants must be rational");
        entries.push_back({idx.str(), rat_str(c.rational_part().as_constant())});
      }
      constants[a.str() + "|" + b.str()] = entries;
    }
  }
  nlohmann::json doc;
  doc["version"] = 1;
  doc["space"] = kind == SpaceKind::CPN ? "cpn" : "chn";
  doc["dim"] = dim;
  doc["max_size"] = max_size;
  doc["hbar"] = hbar;
  doc["constants"] = constants;
  return doc;
}

}  // namespace

FockIndex::FockIndex(std::vector<int> up, std::vector<int> lo)
    : upper(std::move(up)), lower(std::move(lo)) {
  std::sort(upper.begin(), upper.end());
  std::sort(lower.begin(), lower.end());
  for (int x : upper)
    if (x < 1) throw error("Fock index entries must be >= 1");
  for (int x : lower)
    if (x < 1) throw error("Fock index entries must be >= 1");
}

std::string FockIndex::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < upper.size(); ++i) {
    if (i) os << ",";
    os << upper[i];
  }
  os << ";";
  for (size_t i = 0; i < lower.size(); ++i) {
    if (i) os << ",";
    os << lower[i];
  }
  return os.str();
}

FockIndex FockIndex::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw error("Fock index must contain ';'");
  auto parse_list = [](const std::string& part) {
    std::vector<int> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      out.push_back(std::stoi(tok));
    }
    return out;
  };
  return FockIndex(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

Radical Radical::sqrt_of(const RationalH& rho) {
  return Radical(RationalH(Rat(1)), rho);
}

void Radical::canonicalize() {
  if (r_.is_zero() || rho_.is_zero()) {
    r_ = RationalH(Rat(0));
    rho_ = RationalH(Rat(1));
    return;
  }
  if (rho_ == RationalH(Rat(1))) return;
  const int sign_in = sign_at_zero_plus(r_);
  const int rho_in_sign = sign_at_zero_plus(rho_);
  // sqrt(n/d) = sqrt(n d)/d
  Poly num = rho_.num(), den = rho_.den();
  if (!(den == Poly(Rat(1)))) r_ = r_ * RationalH(Poly(Rat(1)), den);
  Poly p = num * den;
  // p = lc * prod a_i^i; the sqrt extracts a_i^(i/2)
  Rat lc = p.leading();
  auto factors = yun_squarefree(p);
  Poly square(Rat(1)), free_part(Rat(1));
  for (size_t i = 0; i < factors.size(); ++i) {
    unsigned mult = static_cast<unsigned>(i + 1);
    square = square * factors[i].pow(mult / 2);
    if (mult % 2) free_part = free_part * factors[i];
  }
  r_ = r_ * RationalH(square);
  // squarefree part as a primitive integer polynomial
  Rat content;
  Poly prim;
  primitive_int(free_part, content, prim);
  Rat c = lc * content;
  int sgn = c < 0 ? -1 : 1;
  Rat abs_c = sgn < 0 ? Rat(-c) : c;
  Int pn = Int(abs_c.get_num()), pd = Int(abs_c.get_den());
  r_ = r_ * RationalH(Rat(1) / Rat(pd));
  Int u, w;
  int_sqrt_part(pn * pd, u, w);
  r_ = r_ * RationalH(Rat(u));
  rho_ = RationalH(Poly(Rat(w * sgn)) * prim);
  if (r_.is_zero()) {
    rho_ = RationalH(Rat(1));
    return;
  }
  // principal branch: radicands here are positive as h -> 0+, and sqrt(rho)
  // denotes the positive root there; keep the sign of the value invariant
  if (rho_in_sign > 0 && sign_at_zero_plus(rho_) > 0 &&
      sign_at_zero_plus(r_) != sign_in)
    r_ = -r_;
}

Radical Radical::operator*(const Radical& o) const {
  return Radical(r_ * o.r_, rho_ * o.rho_);
}

Radical Radical::operator*(const RationalH& c) const { return Radical(r_ * c, rho_); }

Radical Radical::operator+(const Radical& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (!(rho_ == o.rho_))
    throw error("cannot add radicals with distinct radicands: sqrt(" + rho_.str() +
                ") vs sqrt(" + o.rho_.str() + ")");
  return Radical(r_ + o.r_, rho_);
}

Radical Radical::operator-() const {
  Radical r(*this);
  r.r_ = -r.r_;
  return r;
}

Radical Radical::eval_at(const Rat& h0) const {
  return Radical(RationalH(r_.eval_at(h0)), RationalH(rho_.eval_at(h0)));
}

std::string Radical::str() const {
  if (is_rational()) return r_.str();
  return r_.str() + "*sqrt(" + rho_.str() + ")";
}

std::string Generator::str() const {
  std::string base;
  switch (kind) {
    case Kind::Z: base = "z"; break;
    case Kind::DPhi: base = "dPhi"; break;
    case Kind::Zbar: base = "zb"; break;
    case Kind::DbarPhi: base = "dbPhi"; break;
  }
  base += "[" + std::to_string(index) + "]";
  return (side == Side::Left ? "L:" : "R:") + base;
}

Rat sym_delta(const std::vector<int>& j, const std::vector<int>& k) {
  if (j.size() != k.size()) return Rat(0);
  std::vector<int> a = j, b = k;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return Rat(0);
  Rat count(1);
  size_t i = 0;
  while (i < a.size()) {
    size_t e = i;
    while (e < a.size() && a[e] == a[i]) ++e;
    count *= factorial(static_cast<int>(e - i));
    i = e;
  }
  return count / factorial(static_cast<int>(a.size()));
}

FockVector fock_mul(const FockVector& u, const FockVector& v) {
  if (!(u.space == v.space)) throw error("mixed spaces in Fock product");
  FockVector out(u.space);
  for (auto& [iu, cu] : u.coeffs) {
    for (auto& [iv, cv] : v.coeffs) {
      Rat d = sym_delta(iu.lower, iv.upper);
      if (d == 0) continue;
      out.add(FockIndex(iu.upper, iv.lower), cu * cv * RationalH(d));
    }
  }
  return out;
}

RationalH unnormalized_pairing(SpaceKind kind, int n) {
  RationalH a = kind == SpaceKind::CPN ? alpha(n) : beta(n);
  return RationalH(factorial(n)) * a;
}

FockVectorU fock_mul_unnormalized(const FockVectorU& u, const FockVectorU& v) {
  if (!(u.space == v.space)) throw error("mixed spaces in Fock product");
  FockVectorU out(u.space);
  for (auto& [iu, cu] : u.coeffs) {
    for (auto& [iv, cv] : v.coeffs) {
      Rat d = sym_delta(iu.lower, iv.upper);
      if (d == 0) continue;
      RationalH c = cu * cv * RationalH(d) * unnormalized_pairing(u.space.kind, iu.n());
      out.add(FockIndex(iu.upper, iv.lower), c);
    }
  }
  return out;
}

FockVector ladder_apply(const Generator& g, const FockVector& u) {
  return ladder_apply_impl(g, u, [](Generator::Kind k, Generator::Side sd, int sign, int cnt) {
    return ladder_coeff(k, sd, sign, cnt);
  });
}

FockVectorU ladder_apply_unnormalized(const Generator& g, const FockVectorU& u) {
  return ladder_apply_impl(g, u, [](Generator::Kind k, Generator::Side sd, int sign, int cnt) {
    return ladder_coeff_unnorm(k, sd, sign, cnt);
  });
}

Radical normalization(int m, int n, SpaceKind kind) {
  if (m < 0 || n < 0) throw error("normalization requires m, n >= 0");
  RationalH am = kind == SpaceKind::CPN ? alpha(m) : beta(m);
  RationalH an = kind == SpaceKind::CPN ? alpha(n) : beta(n);
  RationalH rad = RationalH(Rat(1)) / (RationalH(factorial(m) * factorial(n)) * am * an);
  return Radical::sqrt_of(rad);
}

Radical normalization_at(int m, int n, SpaceKind kind, long long L) {
  if (kind == SpaceKind::CPN && (m > L || n > L))
    throw error("basis element does not exist in M_L: alpha_" +
                std::to_string(std::max(m, n)) + " has a pole at h = 1/" +
                std::to_string(L));
  return normalization(m, n, kind).eval_at(Rat(1, static_cast<unsigned long>(L)));
}

RingElem fock_ring_repr(Space s, const FockIndex& idx) {
  RingElem out = vacuum(s);
  for (int i : idx.upper) out = out * RingElem::z(s, i);
  for (int j : idx.lower) out = out * RingElem::zbar(s, j);
  return out;
}

std::vector<FockIndex> fock_basis(int dim, int max_upper, int max_lower) {
  auto multisets_upto = [dim](int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
      out.push_back(cur);
      if (remaining == 0) return;
      for (int i = start; i <= dim; ++i) {
        cur.push_back(i);
        self(self, i, remaining - 1);
        cur.pop_back();
      }
    };
    rec(rec, 1, cap);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  };
  std::vector<FockIndex> basis;
  for (auto& up : multisets_upto(max_upper))
    for (auto& lo : multisets_upto(max_lower)) basis.emplace_back(up, lo);
  return basis;
}

MatrixRep matrix_rep(long long L, int dim, SpaceKind kind) {
  if (kind != SpaceKind::CPN)
    throw error("matrix representations exist only for CP^N (no finite CH^N truncation)");
  if (L < 1) throw error("matrix_rep requires L >= 1");
  MatrixRep rep;
  rep.basis = fock_basis(dim, static_cast<int>(L), 0);
  const size_t dim_total = rep.basis.size();
  std::map<FockIndex, size_t> pos;
  for (size_t i = 0; i < dim_total; ++i) pos.emplace(rep.basis[i], i);
  Rat h0(1, static_cast<unsigned long>(L));
  const int sign = +1;
  for (Generator::Kind k : {Generator::Kind::Z, Generator::Kind::DPhi,
                            Generator::Kind::Zbar, Generator::Kind::DbarPhi}) {
    for (int index = 1; index <= dim; ++index) {
      std::vector<std::vector<Radical>> mat(dim_total,
                                            std::vector<Radical>(dim_total, Radical()));
      for (size_t col = 0; col < dim_total; ++col) {
        const FockIndex& src = rep.basis[col];
        int m = src.m();
        if (generator_raises(k, Generator::Side::Left)) {
          if (m + 1 > L) continue;  // image leaves the representation space
          FockIndex target(multiset_plus(src.upper, index), {});
          Radical c = ladder_coeff(k, Generator::Side::Left, sign, m).eval_at(h0);
          mat[pos.at(target)][col] = c;
        } else {
          int mult = multiplicity(src.upper, index);
          if (mult == 0) continue;
          FockIndex target(multiset_minus(src.upper, index), {});
          Radical c = ladder_coeff(k, Generator::Side::Left, sign, m).eval_at(h0) *
                      RationalH(Rat(mult));
          mat[pos.at(target)][col] = c;
        }
      }
      rep.mats.emplace(std::make_pair(k, index), std::move(mat));
    }
  }
  return rep;
}

std::string cache_dir() {
  if (const char* env = std::getenv("STARSEP_CACHE_DIR")) return env;
  return ".star-cache";
}

std::string structure_cache_path(SpaceKind kind, int dim, int max_size,
                                 const std::string& hbar) {
  std::string space = kind == SpaceKind::CPN ? "cpn" : "chn";
  std::string hb = hbar;
  for (auto& ch : hb)
    if (ch == '/') ch = '_';
  return cache_dir() + "/constants-" + space + "-N" + std::to_string(dim) + "-S" +
         std::to_string(max_size) + "-h" + hb + ".json";
}

std::string write_structure_cache(SpaceKind kind, int dim, int max_size,
                                  const std::string& hbar) {
  nlohmann::json doc = structure_constants_json(kind, dim, max_size, hbar);
  std::filesystem::create_directories(cache_dir());
  std::string path = structure_cache_path(kind, dim, max_size, hbar);
  std::ofstream out(path);
  if (!out) throw error("cannot write cache file " + path);
  out << doc.dump(2) << "\n";
  return path;
}

std::string check_structure_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "cannot open " + path;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    return std::string("parse error: ") + e.what();
  }
  if (!doc.contains("version") || doc["version"] != 1) return "unsupported cache version";
  SpaceKind kind = doc["space"] == "cpn" ? SpaceKind::CPN : SpaceKind::CHN;
  nlohmann::json fresh =
      structure_constants_json(kind, doc["dim"], doc["max_size"], doc["hbar"]);
  if (fresh["constants"] != doc["constants"]) return "constants differ from recomputation";
  return "";
}

}  // namespace starsep
