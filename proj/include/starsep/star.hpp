#pragma once

#include <string>
#include <vector>

#include "starsep/ring.hpp"
#include "starsep/series.hpp"

namespace starsep {

/// Truncated star-product series: sum_n h^n c_n with h-free RingElem
/// coefficients (every B-exponent has q = 0).
using HSeries = Series<RingElem>;

HSeries hseries_zero(Space s, int order);

// Exact first-order operators (no truncation): L_{d_k Phi} = h d_k + d_k Phi
// and its antiholomorphic right mirror R_{d_kbar Phi} = h d_kbar + d_kbar Phi.
// These accept arbitrary ring elements, including formal B^(q/h) exponents.
RingElem lstar_dphi(int k, const RingElem& f);
RingElem rstar_dbarphi(int k, const RingElem& f);

// Truncated operator series for left multiplication by zb^l and right
// multiplication by z^l. Inputs must have q = 0 exponents; coefficients with
// h-dependence are expanded (error on a pole at h = 0).
HSeries lstar_zbar_trunc(int l, const RingElem& g, int order);
HSeries rstar_z_trunc(int l, const RingElem& f, int order);

// Series versions: the operator applied order-by-order with truncation.
HSeries lstar_zbar_series(int l, const HSeries& g);
HSeries rstar_z_series(int l, const HSeries& f);

/// f * g mod h^(order+1) via the left-operator expansion of L_f in powers of
/// (L_zbar - zbar).
HSeries star_trunc(const RingElem& f, const RingElem& g, int order);
/// Same product computed from the right-operator expansion of R_g; used as a
/// cross-check of the left route.
HSeries star_trunc_right(const RingElem& f, const RingElem& g, int order);

// Bilinear extensions to truncated series arguments.
HSeries star_series(const HSeries& f, const HSeries& g);
HSeries star_series_right(const HSeries& f, const HSeries& g);

/// f * g mod h^(order+1) via the covariant-form operator series
/// sum_n c_n(h) g_{j1 k1bar} ... (D^{j1}...D^{jn} f) D^{k1bar}...D^{kn bar} g.
/// Independent of star_trunc; used as a cross-engine check.
HSeries star_covariant(const RingElem& f, const RingElem& g, int order);

/// Exact finite star product on CP^N at h = 1/L. Both factors must lie in
/// the finite function space M_L (polynomials of bidegree <= L over B^L);
/// the covariant series then terminates at n = L and the result is again in
/// M_L. Membership is checked structurally and via D^(L+1) f = 0.
RingElem star_exact_fock(const RingElem& f, const RingElem& g, long long L);

/// Structural membership test for M_L on an exact-mode element (q = 0).
bool in_fock_space(const RingElem& f, long long L);


struct KarabegovResult {
  bool pass = true;
  // first failing (sample index, conjugate index ibar, h-order, diff string)
  std::string witness;
};

/// Checks [L_{zbar^l}, h d_ibar + d_ibar Phi] = 0 through h^order on each
/// sample, for every conjugate direction ibar.
KarabegovResult verify_karabegov(int l, int order, const std::vector<RingElem>& samples);

/// Deterministic sample basket used by verification suites (8 elements).
std::vector<RingElem> sample_basket(Space s);

}  // namespace starsep
