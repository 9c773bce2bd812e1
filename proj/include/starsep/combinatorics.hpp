#pragma once

#include "starsep/common.hpp"
#include "starsep/scalar.hpp"

namespace starsep {

enum class SpaceKind { CPN, CHN };

/// Stirling number of the second kind S(n, k) via the standard recursion
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1). Out-of-range arguments give 0.
Int stirling2(int n, int k);

/// Coefficient a_m^(n) of the operator series, 2 <= m <= n, defined by the
/// recursion a_m^(n) = a_{m-1}^(n-1) + (m-1) a_m^(n-1) with a_2^(n) = 1.
/// Values are memoized; the table is capped at n <= coeff_table_cap().
Int coeff_a(int n, int m);
int coeff_table_cap();
void set_coeff_table_cap(int cap);

/// Generating function alpha_m(h) = h^m * prod_{n=1..m-1} 1/(1 - n h),
/// m >= 1 (alpha_1 = h, alpha_0 = 1 by convention).
RationalH alpha(int m);

/// beta_m(h) = (-1)^m alpha_m(-h) = h^m * prod_{n=1..m-1} 1/(1 + n h).
RationalH beta(int m);

/// Coefficient of the covariant-form operator series: alpha_n/n! on CP^N,
/// beta_n/n! on CH^N, with c_0 = 1.
RationalH c_covariant(int n, SpaceKind space);

Rat factorial(int n);

}  // namespace starsep
