#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsep/common.hpp"

namespace starsep {

/// Dense univariate polynomial in the deformation parameter h over the
/// exact rationals. Coefficients are stored by ascending degree with no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly h();  // the monomial h

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& leading() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  /// Largest k with h^k dividing the polynomial (0 for nonzero constant term).
  int order_at_zero() const;

  std::string str(const char* var = "h") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Element of Q(h), the field of rational functions of the deformation
/// parameter. Canonical form: numerator and denominator coprime, denominator
/// monic, zero represented as 0/1. All arithmetic is exact.
class RationalH {
 public:
  RationalH() : num_(), den_(Rat(1)) {}
  RationalH(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RationalH(long n) : num_(Rat(n)), den_(Rat(1)) {}   // NOLINT(google-explicit-constructor)
  explicit RationalH(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  RationalH(Poly num, Poly den);

  static RationalH h();
  /// (a + b*h) as a rational function; convenience for linear factors.
  static RationalH linear(const Rat& a, const Rat& b);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat as_constant() const;

  RationalH operator-() const;
  RationalH operator+(const RationalH& o) const;
  RationalH operator-(const RationalH& o) const;
  RationalH operator*(const RationalH& o) const;
  RationalH operator/(const RationalH& o) const;  // throws on division by zero
  RationalH& operator+=(const RationalH& o) { return *this = *this + o; }
  RationalH& operator-=(const RationalH& o) { return *this = *this - o; }
  RationalH& operator*=(const RationalH& o) { return *this = *this * o; }
  bool operator==(const RationalH& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalH pow(int e) const;  // negative e inverts; throws on 0^negative

  /// Taylor coefficients at h = 0 through order K. Throws if the function has
  /// a pole at 0, naming the offending denominator factor.
  std::vector<Rat> taylor(int order) const;

  /// Exact substitution h = h0. Throws on a pole at h0.
  Rat eval_at(const Rat& h0) const;

  /// Floating-point substitution; throws if the denominator vanishes to
  /// working precision.
  double eval(double h0) const;

  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

RationalH rh_add(const RationalH& a, const RationalH& b);
RationalH rh_sub(const RationalH& a, const RationalH& b);
RationalH rh_mul(const RationalH& a, const RationalH& b);
RationalH rh_div(const RationalH& a, const RationalH& b);

}  // namespace starsep
