#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starsep/combinatorics.hpp"
#include "starsep/scalar.hpp"
#include "starsep/series.hpp"

namespace starsep {

/// CP^N (sign +1) or CH^N (sign -1) in inhomogeneous coordinates. The base
/// factor is B = 1 + sign*|z|^2 and the Kahler potential is sign*ln(B).
struct Space {
  SpaceKind kind;
  int dim;

  int sign() const { return kind == SpaceKind::CPN ? +1 : -1; }
  bool operator==(const Space& o) const = default;
  std::string str() const;
};

inline Space cpn(int n) { return Space{SpaceKind::CPN, n}; }
inline Space chn(int n) { return Space{SpaceKind::CHN, n}; }

/// One monomial key: z^za * zb^zb * B^(p + q/h) * lnB^r.
/// za/zb are multidegree vectors of length Space::dim.
struct TermKey {
  std::vector<int> za, zb;
  long long p = 0;
  long long q = 0;
  int r = 0;

  auto operator<=>(const TermKey&) const = default;
};

/// Element of the closed function ring on CP^N / CH^N: a finite sum of
/// terms c(h) * z^za * zb^zb * B^(p + q/h) * lnB^r with c in Q(h).
///
/// Canonical form: terms are grouped into classes by (q, r); within a class
/// all terms share one power p of B, chosen maximal such that the polynomial
/// part is not divisible by B (differences of nonnegative B-powers expand
/// exactly, so equality of ring elements is equality of term maps). Zero
/// coefficients are never stored.
class RingElem {
 public:
  explicit RingElem(Space space) : space_(space) {}

  static RingElem zero(Space s) { return RingElem(s); }
  static RingElem one(Space s) { return scalar(s, RationalH(Rat(1))); }
  static RingElem scalar(Space s, const RationalH& c);
  static RingElem z(Space s, int k);      // z^k, 1-based index
  static RingElem zbar(Space s, int k);   // conj coordinate
  static RingElem bpow(Space s, long long p, long long q);  // B^(p + q/h)
  static RingElem lnb(Space s);           // ln B
  static RingElem monomial(Space s, TermKey key, RationalH c);

  const Space& space() const { return space_; }
  const std::map<TermKey, RationalH>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const RingElem& o) const { return space_ == o.space_ && t_ == o.t_; }

  RingElem operator-() const;
  RingElem operator+(const RingElem& o) const;
  /// Sum of many addends with a single canonicalization pass.
  static RingElem sum(Space s, const std::vector<RingElem>& parts);
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem scaled(const RationalH& c) const;
  RingElem pow(unsigned e) const;

  bool is_h_free() const;
  bool has_formal_exponent() const;  // any term with q != 0
  bool has_log() const;              // any term with r != 0

  /// Split into h-free coefficients: sum_n h^n c_n mod h^(order+1).
  /// Requires q == 0 on every term; coefficients must be pole-free at h = 0.
  Series<RingElem> h_decompose(int order) const;

  /// Substitute h = 1/L: every exponent p + q/h collapses to the integer
  /// p + q L and coefficients are evaluated exactly (error on a pole).
  RingElem collapse_exact(long long L) const;

  /// Numeric evaluation at a point. CH^N requires |z| < 1.
  std::complex<double> eval_numeric(const std::vector<std::complex<double>>& z,
                                    double h0) const;

  std::string str() const;

 private:
  void insert(const TermKey& key, const RationalH& c);
  void normalize();
  Space space_;
  std::map<TermKey, RationalH> t_;
};

RingElem operator*(const RationalH& c, const RingElem& f);

// First-order geometry. Index arguments are 1-based.
RingElem d_hol(int k, const RingElem& f);      // d/dz^k
RingElem d_antihol(int k, const RingElem& f);  // d/dzb^k
RingElem apply_D_bar(int l, const RingElem& f);  // D^lbar = g^{lbar k} d_k
RingElem apply_D(int l, const RingElem& f);      // D^l = g^{l kbar} d_kbar
RingElem metric_lower(Space s, int i, int j);    // g_{i jbar}
RingElem metric_upper(Space s, int l, int k);    // g^{lbar k}
RingElem vacuum(Space s);                        // e^{-Phi/h} = B^(0, -sign)
RingElem phi(Space s);                           // Kahler potential
RingElem dphi(Space s, int k);                   // d_k Phi = zb^k B^(-1)
RingElem dbarphi(Space s, int k);                // d_kbar Phi = z^k B^(-1)

/// Antisymmetric bidifferential g^{lbar k}(d_lbar f d_k g - d_lbar g d_k f).
RingElem poisson_antisym(const RingElem& f, const RingElem& g);

/// |z|^2 as a ring element.
RingElem norm_sq(Space s);

}  // namespace starsep
