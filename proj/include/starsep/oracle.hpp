#pragma once

#include <complex>
#include <string>
#include <vector>

#include "starsep/star.hpp"

namespace starsep {

/// Parameters of the Gauss function 2F1(a, b; c0 + c1/h; arg_sign * x) with
/// x = |z|^2. c1 != 0 guarantees the k-th series term is O(h^k).
struct HypParams {
  int a, b, c0, c1;
  int arg_sign;  // +1 or -1
};

/// Truncated h-series whose coefficients are polynomials in x = |z|^2.
using XSeries = Series<Poly>;

/// Expands the Gauss series term-by-term: the k-th term carries the inverted
/// Pochhammer (c0 + c1/h)_k as an exact rational function of h.
XSeries hyp_expand(const HypParams& p, int order);

/// The phase-space-reduction series F~1 / F~2 (kind 1 / 2): a finite triple
/// sum in powers of (1+x) at each h-order, expanded into x-polynomials.
XSeries bordemann_F(int kind, int order);

/// x -> |z|^2 substitution.
RingElem substitute_norm_sq(Space s, const Poly& xpoly);

/// Multiply a series by a scalar rational function of h, truncated.
HSeries scalar_convolve(const HSeries& s, const RationalH& c);
XSeries scalar_convolve(const XSeries& s, const RationalH& c);

/// The closed-form product zb^i * z^j assembled from 2F1 expansions
/// (delta-term plus zb z-term, with space-dependent signs and arguments).
HSeries closed_form_product(Space s, int i, int j, int order);

/// CP^1 form of zb * z with a single 2F1: x + h (1+x)^2 2F1(1,2;1-1/h;-x).
HSeries closed_form_product_cp1(int order);

/// Partial sum of the operator series for zb^l * vac (left_zbar = true) or
/// vac * z^l (false) through operator order term_cap. Coefficients stay in
/// Q(h); the alpha-poles cancel symbolically against the D-string factors.
/// drop_term skips one operator order (negative-control use).
RingElem vacuum_series_partial(Space s, int l, bool left_zbar, int term_cap,
                               int drop_term = -1);

struct NumericCheck {
  std::string identity;
  double h0 = 0;
  int term_cap = 0;
  double tolerance = 0;
  double max_residual = 0;
  int points = 0;
  bool pass = false;
};

/// Numeric residual of a vacuum annihilation identity that is an infinite
/// sum in formal mode. Identities: "cp-zbar-vac", "cp-vac-z", "ch-zbar-vac",
/// "ch-vac-z" (dimension taken from the points).
NumericCheck numeric_residual(const std::string& identity,
                              const std::vector<std::vector<std::complex<double>>>& points,
                              double h0, int term_cap, double tolerance = 1e-10,
                              int drop_term = -1);

}  // namespace starsep
