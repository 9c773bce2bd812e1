#include "doctest.h"
#include "starsep/combinatorics.hpp"
#include "starsep/series.hpp"

using namespace starsep;

namespace {

// Independent oracle: plain double recursion, no memoization, no shortcuts.
Int stirling2_brute(int n, int k) {
  if (n == 0 && k == 0) return Int(1);
  if (n <= 0 || k <= 0) return Int(0);
  return Int(k) * stirling2_brute(n - 1, k) + stirling2_brute(n - 1, k - 1);
}

}  // namespace

TEST_CASE("stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 2) == stirling2_brute(3, 2));
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_brute(n, k));
}

TEST_CASE("coeff_a recursion and Stirling identity") {
  for (int n = 2; n <= 6; ++n) CHECK(coeff_a(n, 2) == 1);
  CHECK(coeff_a(4, 3) == 3);
  CHECK(coeff_a(5, 3) == 7);
  CHECK_THROWS_AS(coeff_a(3, 7), error);
  CHECK_THROWS_AS(coeff_a(4, 1), error);
  for (int n = 2; n <= 12; ++n)
    for (int m = 2; m <= n; ++m) CHECK(coeff_a(n, m) == stirling2(n - 1, m - 1));
}

TEST_CASE("alpha closed forms") {
  CHECK(alpha(1) == RationalH::h());
  CHECK(alpha(2) == RationalH(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(-1)})));
  Poly d4 = Poly(std::vector<Rat>{Rat(1), Rat(-1)}) *
            Poly(std::vector<Rat>{Rat(1), Rat(-2)}) *
            Poly(std::vector<Rat>{Rat(1), Rat(-3)});
  CHECK(alpha(4) == RationalH(Poly::h().pow(4), d4));

  // alpha_3 series: 0,0,0,1,3,7 = S(n-1,2)
  auto t = alpha(3).taylor(5);
  CHECK(t == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1), Rat(3), Rat(7)});
}

TEST_CASE("alpha functional equation") {
  // alpha_m = h [alpha_{m-1} + (m-1) alpha_m]
  for (int m = 2; m <= 8; ++m) {
    RationalH lhs = alpha(m);
    RationalH rhs = RationalH::h() * (alpha(m - 1) + RationalH(Rat(m - 1)) * alpha(m));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("alpha series matches coefficient table") {
  for (int m = 2; m <= 8; ++m) {
    auto t = alpha(m).taylor(12);
    for (int n = 0; n <= 12; ++n) {
      Int expect = (n >= m) ? coeff_a(n, m) : Int(0);
      CHECK(Rat(expect) == t[static_cast<size_t>(n)]);
      CHECK(Rat(stirling2(n - 1, m - 1)) == t[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("beta duality") {
  CHECK(beta(1) == RationalH::h());
  CHECK(beta(2) == RationalH(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(1)})));
  Poly d3 = Poly(std::vector<Rat>{Rat(1), Rat(1)}) * Poly(std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(beta(3) == RationalH(Poly::h().pow(3), d3));
  // beta_m(h) = (-1)^m alpha_m(-h), checked on series coefficients
  for (int m = 1; m <= 8; ++m) {
    auto a = alpha(m).taylor(12);
    auto b = beta(m).taylor(12);
    for (int n = 0; n <= 12; ++n) {
      int sgn = ((m + n) % 2 == 0) ? 1 : -1;
      CHECK(b[static_cast<size_t>(n)] == Rat(sgn) * a[static_cast<size_t>(n)]);
    }
  }
}

TEST_CASE("covariant coefficients") {
  CHECK(c_covariant(0, SpaceKind::CPN) == RationalH(Rat(1)));
  CHECK(c_covariant(1, SpaceKind::CPN) == RationalH::h());
  // c_2 on CH^N: h^2/(2(1+h))
  CHECK(c_covariant(2, SpaceKind::CHN) ==
        RationalH(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(2), Rat(2)})));
  // recursion n(1 - h(n-1)) c_n - h c_{n-1} = 0 on CP^N
  for (int n = 1; n <= 8; ++n) {
    RationalH lhs = RationalH(Rat(n)) * RationalH::linear(Rat(1), Rat(-(n - 1))) *
                        c_covariant(n, SpaceKind::CPN) -
                    RationalH::h() * c_covariant(n - 1, SpaceKind::CPN);
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("table cap") {
  CHECK(coeff_table_cap() == 64);
  CHECK_THROWS_AS(coeff_a(coeff_table_cap() + 1, 2), error);
}
