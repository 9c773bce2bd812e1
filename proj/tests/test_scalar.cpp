#include "doctest.h"
#include "starsep/scalar.hpp"
#include "starsep/series.hpp"

#include <random>

using namespace starsep;

namespace {

RationalH h() { return RationalH::h(); }

// random rational function with no pole at h = 0
RationalH random_pole_free(std::mt19937_64& rng) {
  auto small = [&](int lo, int hi) {
    return static_cast<long>(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)));
  };
  std::vector<Rat> num, den;
  int dn = static_cast<int>(rng() % 4);
  for (int i = 0; i <= dn; ++i) num.push_back(Rat(small(-4, 4)));
  int dd = static_cast<int>(rng() % 3);
  den.push_back(Rat(small(1, 4)));  // nonzero constant term
  for (int i = 1; i <= dd; ++i) den.push_back(Rat(small(-4, 4)));
  return RationalH(Poly(num), Poly(den));
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  CHECK(rh_add(h(), h()) == RationalH(Poly(std::vector<Rat>{Rat(0), Rat(2)})));

  // (h^2/(1-h)) * (1-h) = h^2 after cancellation
  RationalH a(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
  RationalH b(Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
  CHECK(rh_mul(a, b) == RationalH(Poly::h().pow(2)));

  // h^3 / ((1-h)(1-2h)) equals alpha_3-style closed form
  Poly den = Poly(std::vector<Rat>{Rat(1), Rat(-1)}) * Poly(std::vector<Rat>{Rat(1), Rat(-2)});
  RationalH q = rh_div(RationalH(Poly::h().pow(3)), RationalH(den));
  CHECK(q == RationalH(Poly::h().pow(3), den));

  CHECK_THROWS_AS(rh_div(h(), RationalH()), error);
}

TEST_CASE("canonical form") {
  // denominator made monic, gcd cancelled
  RationalH a(Poly(std::vector<Rat>{Rat(0), Rat(2)}), Poly(std::vector<Rat>{Rat(2)}));
  CHECK(a == h());
  RationalH b(Poly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}), Poly::h());
  CHECK(b == h());
  // zero normalizes to 0/1
  RationalH z = h() - h();
  CHECK(z.is_zero());
  CHECK(z.den() == Poly(Rat(1)));
}

TEST_CASE("expand_series") {
  // alpha_2 = h^2/(1-h): [0,0,1,1,1]
  RationalH a2(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
  auto t = a2.taylor(4);
  CHECK(t == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)});

  // geometric series 1/(1-2h): [1,2,4,8]
  RationalH g(Poly(Rat(1)), Poly(std::vector<Rat>{Rat(1), Rat(-2)}));
  CHECK(g.taylor(3) == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8)});

  // pole at 0 reported with the offending factor
  RationalH p(Poly(Rat(1)), Poly::h().pow(2));
  CHECK_THROWS_WITH_AS(p.taylor(3), "pole at h = 0: denominator divisible by h^2", error);

  // h^2/h is fine: cancellation before expansion
  RationalH c(Poly::h().pow(2), Poly::h());
  CHECK(c.taylor(2) == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    RationalH a = random_pole_free(rng) - random_pole_free(rng);
    RationalH again(a.num(), a.den());
    CHECK(a == again);
  }
}

TEST_CASE("expand_series is multiplicative") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    RationalH a = random_pole_free(rng);
    RationalH b = random_pole_free(rng);
    int order = 6;
    HTrunc lhs = expand_series(a * b, order);
    HTrunc rhs = expand_series(a, order) * expand_series(b, order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eval_at") {
  RationalH a2(Poly::h().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
  CHECK(a2.eval_at(Rat(1, 3)) == Rat(1, 6));
  CHECK(h().eval_at(Rat(1, 5)) == Rat(1, 5));

  // alpha_4 has a 1/(1-3h) factor: pole at h = 1/3
  Poly den = Poly(std::vector<Rat>{Rat(1), Rat(-1)}) *
             Poly(std::vector<Rat>{Rat(1), Rat(-2)}) *
             Poly(std::vector<Rat>{Rat(1), Rat(-3)});
  RationalH a4(Poly::h().pow(4), den);
  CHECK_THROWS_AS(a4.eval_at(Rat(1, 3)), error);
}

TEST_CASE("eval_at commutes with field ops") {
  std::mt19937_64 rng(777);
  Rat h0(2, 7);
  for (int trial = 0; trial < 40; ++trial) {
    RationalH a = random_pole_free(rng);
    RationalH b = random_pole_free(rng);
    bool ok = true;
    Rat va, vb;
    try {
      va = a.eval_at(h0);
      vb = b.eval_at(h0);
    } catch (const error&) {
      ok = false;  // pole at the sample point; skip
    }
    if (!ok) continue;
    CHECK((a + b).eval_at(h0) == va + vb);
    CHECK((a * b).eval_at(h0) == va * vb);
    if (vb != 0) CHECK((a / b).eval_at(h0) == va / vb);
  }
}

TEST_CASE("series ring truncation") {
  HTrunc x = htrunc(3);
  x[1] = 1;  // h
  HTrunc y = x * x;
  CHECK(y[2] == 1);
  CHECK(y[3] == 0);
  HTrunc z = expand_series(RationalH(Poly(Rat(1)), Poly(std::vector<Rat>{Rat(1), Rat(-1)})), 3);
  CHECK((z * z)[3] == 4);  // (sum h^n)^2 has n+1 at h^n
}
