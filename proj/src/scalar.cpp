#include "starsep/scalar.hpp"

#include <sstream>

namespace starsep {

Poly::Poly(Rat c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::h() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw error("polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo;
  int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - db, Rat(0));
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    Rat f = rem.back() / b.c_.back();
    int shift = static_cast<int>(rem.size()) - 1 - db;
    quo[shift] = f;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

namespace {

// primitive integer coefficient vector of a rational polynomial
std::vector<Int> primitive_z(const Poly& p) {
  Int lcm_den = 1;
  for (const Rat& c : p.coeffs()) lcm_den = lcm(lcm_den, Int(c.get_den()));
  std::vector<Int> v;
  Int g = 0;
  for (const Rat& c : p.coeffs()) {
    Rat s = c * Rat(lcm_den);
    v.push_back(Int(s.get_num()));
    g = gcd(g, v.back());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

void trim_z(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive_z(std::vector<Int>& v) {
  Int g = 0;
  for (auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// pseudo-remainder of a by b over the integers, b nonzero
std::vector<Int> prem_z(std::vector<Int> a, const std::vector<Int>& b) {
  const size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Int la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim_z(a);
  }
  return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  // primitive PRS over the integers keeps coefficient growth tame
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Int> va = primitive_z(a), vb = primitive_z(b);
  if (va.size() < vb.size()) std::swap(va, vb);
  while (!vb.empty()) {
    std::vector<Int> r = prem_z(va, vb);
    make_primitive_z(r);
    va = std::move(vb);
    vb = std::move(r);
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(va.size());
  for (auto& x : va) coeffs.push_back(Rat(x));
  return Poly(std::move(coeffs)).monic();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*this);
  Rat l = leading();
  for (auto& c : r.c_) c /= l;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r{Rat(1)};
  Poly base(*this);
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double Poly::eval(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

int Poly::order_at_zero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalH::RationalH(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw error("rational function with zero denominator");
  normalize();
}

RationalH RationalH::h() { return RationalH(Poly::h()); }

RationalH RationalH::linear(const Rat& a, const Rat& b) {
  return RationalH(Poly(std::vector<Rat>{a, b}));
}

void RationalH::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (num_.degree() == 0 || den_.degree() == 0) {
    // a constant on either side cannot share a factor; just make den monic
    Rat l = den_.leading();
    if (l != 1) {
      std::vector<Rat> n = num_.coeffs(), d = den_.coeffs();
      for (auto& c : n) c /= l;
      for (auto& c : d) c /= l;
      num_ = Poly(std::move(n));
      den_ = Poly(std::move(d));
    }
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = q;
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat l = den_.leading();
  if (l != 1) {
    std::vector<Rat> n = num_.coeffs(), d = den_.coeffs();
    for (auto& c : n) c /= l;
    for (auto& c : d) c /= l;
    num_ = Poly(std::move(n));
    den_ = Poly(std::move(d));
  }
}

Rat RationalH::as_constant() const {
  if (!is_constant()) throw error("rational function " + str() + " is not constant");
  if (num_.is_zero()) return Rat(0);
  return num_.coeff(0) / den_.coeff(0);
}

RationalH RationalH::operator-() const {
  RationalH r(*this);
  r.num_ = -r.num_;
  return r;
}

namespace {

// scale a polynomial by a nonzero rational
Poly poly_scale(const Poly& p, const Rat& c) {
  std::vector<Rat> v = p.coeffs();
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly exact_quot(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

}  // namespace

RationalH RationalH::operator+(const RationalH& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // both denominators are coprime with their numerators and monic
  Poly g = Poly::gcd(den_, o.den_);
  if (g.degree() <= 0) {
    RationalH out;
    out.num_ = num_ * o.den_ + o.num_ * den_;
    out.den_ = den_ * o.den_;
    if (out.num_.is_zero()) out.den_ = Poly(Rat(1));
    return out;
  }
  Poly da = exact_quot(den_, g), db = exact_quot(o.den_, g);
  Poly num = num_ * db + o.num_ * da;
  if (num.is_zero()) return RationalH();
  Poly h = Poly::gcd(num, g);
  RationalH out;
  if (h.degree() > 0) {
    out.num_ = exact_quot(num, h);
    out.den_ = da * db * g;
    out.den_ = exact_quot(out.den_, h);
  } else {
    out.num_ = num;
    out.den_ = da * db * g;
  }
  Rat l = out.den_.leading();
  if (l != 1) {
    out.num_ = poly_scale(out.num_, 1 / l);
    out.den_ = poly_scale(out.den_, 1 / l);
  }
  return out;
}

RationalH RationalH::operator-(const RationalH& o) const { return *this + (-o); }

RationalH RationalH::operator*(const RationalH& o) const {
  if (is_zero() || o.is_zero()) return RationalH();
  // constant factors scale numerators directly
  if (is_constant()) {
    RationalH out(o);
    out.num_ = poly_scale(out.num_, as_constant());
    if (out.num_.is_zero()) out.den_ = Poly(Rat(1));
    return out;
  }
  if (o.is_constant()) return o * *this;
  // cross-cancellation keeps the result canonical without a final gcd
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly na = g1.degree() > 0 ? exact_quot(num_, g1) : num_;
  Poly db = g1.degree() > 0 ? exact_quot(o.den_, g1) : o.den_;
  Poly nb = g2.degree() > 0 ? exact_quot(o.num_, g2) : o.num_;
  Poly da = g2.degree() > 0 ? exact_quot(den_, g2) : den_;
  RationalH out;
  out.num_ = na * nb;
  out.den_ = da * db;
  Rat l = out.den_.leading();
  if (l != 1) {
    out.num_ = poly_scale(out.num_, 1 / l);
    out.den_ = poly_scale(out.den_, 1 / l);
  }
  return out;
}

RationalH RationalH::operator/(const RationalH& o) const {
  if (o.is_zero()) throw error("division by zero in Q(h)");
  if (is_zero()) return RationalH();
  return *this * RationalH(o.den_, o.num_);
}

RationalH RationalH::pow(int e) const {
  if (e == 0) return RationalH(Rat(1));
  if (e < 0) {
    if (is_zero()) throw error("zero raised to a negative power in Q(h)");
    return RationalH(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
  }
  return RationalH(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::vector<Rat> RationalH::taylor(int order) const {
  if (order < 0) throw error("negative truncation order");
  int k = den_.order_at_zero();
  if (!num_.is_zero() && num_.order_at_zero() < k) {
    throw error("pole at h = 0: denominator divisible by h^" + std::to_string(k));
  }
  // Both num and den divisible by h^k (or num zero): cancel before inverting.
  auto shift = [k](const Poly& p) {
    std::vector<Rat> c;
    for (int i = k; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    return Poly(std::move(c));
  };
  Poly n = k > 0 ? shift(num_) : num_;
  Poly d = k > 0 ? shift(den_) : den_;
  Rat d0 = d.coeff(0);
  // d0 != 0 by construction of order_at_zero
  std::vector<Rat> inv(order + 1, Rat(0));
  inv[0] = 1 / d0;
  for (int i = 1; i <= order; ++i) {
    Rat s(0);
    for (int j = 1; j <= i; ++j) s += d.coeff(j) * inv[i - j];
    inv[i] = -s / d0;
  }
  std::vector<Rat> out(order + 1, Rat(0));
  for (int i = 0; i <= order; ++i) {
    Rat s(0);
    for (int j = 0; j <= i; ++j) s += n.coeff(j) * inv[i - j];
    out[i] = s;
  }
  return out;
}

Rat RationalH::eval_at(const Rat& h0) const {
  Rat d = den_.eval(h0);
  if (d == 0) throw error("pole of " + str() + " at h = " + h0.get_str());
  return num_.eval(h0) / d;
}

double RationalH::eval(double h0) const {
  double d = den_.eval(h0);
  if (d == 0.0) throw error("pole at h = " + std::to_string(h0));
  return num_.eval(h0) / d;
}

std::string RationalH::str() const {
  if (den_ == Poly(Rat(1))) {
    if (num_.degree() <= 0) return num_.str();
    return "(" + num_.str() + ")";
  }
  // display with an integer-primitive denominator (value unchanged)
  Int lcm_den = 1;
  for (const Rat& c : den_.coeffs()) lcm_den = lcm(lcm_den, Int(c.get_den()));
  Int g = 0;
  for (const Rat& c : den_.coeffs()) g = gcd(g, Int(Rat(c * Rat(lcm_den)).get_num()));
  Rat scale = g == 0 ? Rat(1) : Rat(lcm_den) / Rat(g);
  Poly n = num_, d = den_;
  if (scale != 1) {
    std::vector<Rat> nv = n.coeffs(), dv = d.coeffs();
    for (auto& c : nv) c *= scale;
    for (auto& c : dv) c *= scale;
    n = Poly(std::move(nv));
    d = Poly(std::move(dv));
  }
  return "(" + n.str() + ")/(" + d.str() + ")";
}

RationalH rh_add(const RationalH& a, const RationalH& b) { return a + b; }
RationalH rh_sub(const RationalH& a, const RationalH& b) { return a - b; }
RationalH rh_mul(const RationalH& a, const RationalH& b) { return a * b; }
RationalH rh_div(const RationalH& a, const RationalH& b) { return a / b; }

}  // namespace starsep
