#include "doctest.h"
#include "starsep/parse.hpp"
#include "starsep/verify.hpp"

using namespace starsep;

TEST_CASE("parse basics") {
  Space s2 = cpn(2);
  RingElem e = parse_expr("zb[1]*z[2] + h*B(1,0)", s2);
  RingElem expect = RingElem::zbar(s2, 1) * RingElem::z(s2, 2) +
                    RingElem::scalar(s2, RationalH::h()) * RingElem::bpow(s2, 1, 0);
  CHECK(e == expect);

  CHECK(parse_expr("dPhi[1]", s2) == dphi(s2, 1));
  CHECK(parse_expr("dPhi[1]", s2) ==
        RingElem::zbar(s2, 1) * RingElem::bpow(s2, -1, 0));
  CHECK(parse_expr("B(0,-1)", s2) == vacuum(s2));
  CHECK(parse_expr("vac", chn(1)) == RingElem::bpow(chn(1), 0, 1));
  CHECK(parse_expr("dbPhi[2]", s2) == dbarphi(s2, 2));
  CHECK(parse_expr("lnB", s2) == RingElem::lnb(s2));
  CHECK(parse_expr("3/4", s2) == RingElem::scalar(s2, RationalH(Rat(3, 4))));
  CHECK(parse_expr("z[1]^3", s2) == RingElem::z(s2, 1).pow(3));
  CHECK(parse_expr("-z[1] + z[1]", s2).is_zero());
  CHECK(parse_expr("h^-2", s2) == RingElem::scalar(s2, RationalH::h().pow(-2)));
  CHECK(parse_expr("(1 + z[1]*zb[1] + z[2]*zb[2])", s2) == RingElem::bpow(s2, 1, 0));
  CHECK(parse_expr("2*(z[1] - 1/2)", s2) ==
        RingElem::z(s2, 1) * RingElem::scalar(s2, RationalH(Rat(2))) -
            RingElem::one(s2));
}

TEST_CASE("parse errors carry position and reason") {
  Space s = cpn(1);
  CHECK_THROWS_WITH_AS(parse_expr("z[2]", s),
                       "parse error at position 2: coordinate index 2 out of range 1..1",
                       error);
  CHECK_THROWS_AS(parse_expr("z[1", s), error);
  CHECK_THROWS_AS(parse_expr("w[1]", s), error);
  CHECK_THROWS_AS(parse_expr("z[1] +", s), error);
  CHECK_THROWS_AS(parse_expr("z[1] z[1]", s), error);
  CHECK_THROWS_AS(parse_expr("z[1]^x", s), error);
  // division only by scalars; negative powers only via B(p,q)
  CHECK_THROWS_AS(parse_expr("1/z[1]", s), error);
  CHECK_THROWS_AS(parse_expr("z[1]/vac", s), error);
  CHECK_THROWS_AS(parse_expr("z[1]^-1", s), error);
  CHECK_THROWS_AS(parse_expr("1/0", s), error);
  CHECK_THROWS_AS(parse_expr("z[1]^(2)", s), error);  // integer exponents only
}

TEST_CASE("print-parse round trip on random elements") {
  std::uint64_t state = 99;
  for (Space s : {cpn(1), cpn(2), chn(2)}) {
    for (int t = 0; t < 20; ++t) {
      RingElem f = seeded_poly(s, state, 3);
      // mix in B powers and h-dependent coefficients
      RingElem g = f * RingElem::bpow(s, -1, 0) +
                   RingElem::scalar(s, RationalH::h()) * seeded_poly(s, state, 2) +
                   vacuum(s) * seeded_poly(s, state, 1);
      CHECK(parse_expr(g.str(), s) == g);
    }
  }
  // coefficients with denominators print re-parseably
  Space s1 = cpn(1);
  RingElem h_rat = RingElem::scalar(
      s1, RationalH(Poly::h(), Poly(std::vector<Rat>{Rat(1), Rat(-1)})));
  RingElem e = h_rat * RingElem::z(s1, 1) + RingElem::lnb(s1).pow(2);
  CHECK(parse_expr(e.str(), s1) == e);
  CHECK(parse_expr(RingElem::zero(s1).str(), s1).is_zero());
}
