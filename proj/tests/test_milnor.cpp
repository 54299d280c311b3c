#include <doctest.h>

#include "k3fib/errors.hpp"
#include "k3fib/milnor.hpp"

using namespace k3fib;

namespace {

WPoly xp(Var v, unsigned k) { return WPoly::term(Monomial::var(v, k), TPoly(1)); }

const std::vector<Var> kUVW = {Var::x1, Var::x2, Var::x3};

}  // namespace

TEST_CASE("chain singularities have the predicted colength") {
  // u^2 + v^2 + w^(r+1) has Milnor number r (quasi-homogeneous oracle:
  // (2-1)/1 * (2-1)/1 * ((r+1)-1)/1 over the weights 1/2, 1/2, 1/(r+1)).
  for (int r = 1; r <= 5; ++r) {
    CAPTURE(r);
    WPoly f = xp(Var::x1, 2) + xp(Var::x2, 2) + xp(Var::x3, r + 1);
    MilnorResult res = milnor_number(f, kUVW);
    CHECK(res.isolated);
    CHECK(res.milnor == r);
  }
}

TEST_CASE("the exceptional singularity u^2 + v^3 + w^5") {
  // Quasi-homogeneous oracle: (2-1)(3-1)(5-1)/1 = 1 * 2 * 4 = 8.
  WPoly f = xp(Var::x1, 2) + xp(Var::x2, 3) + xp(Var::x3, 5);
  MilnorResult res = milnor_number(f, kUVW);
  CHECK(res.isolated);
  CHECK(res.milnor == 8);
}

TEST_CASE("more quasi-homogeneous calibration points") {
  // mu = prod(1/w_i - 1) for an isolated quasi-homogeneous singularity.
  struct Case {
    int a, b, c, mu;
  };
  for (const Case k : {Case{3, 3, 3, 8}, Case{2, 4, 4, 9}, Case{2, 2, 2, 1}}) {
    CAPTURE(k.a);
    CAPTURE(k.b);
    CAPTURE(k.c);
    WPoly f = xp(Var::x1, k.a) + xp(Var::x2, k.b) + xp(Var::x3, k.c);
    MilnorResult res = milnor_number(f, kUVW);
    CHECK(res.isolated);
    CHECK(res.milnor == k.mu);
  }
}

TEST_CASE("plane curve germs in two variables") {
  const std::vector<Var> uv = {Var::x1, Var::x2};
  WPoly node = xp(Var::x1, 2) - xp(Var::x2, 2);
  MilnorResult rn = milnor_number(node, uv);
  CHECK(rn.isolated);
  CHECK(rn.milnor == 1);

  WPoly cusp = xp(Var::x1, 2) - xp(Var::x2, 3);
  MilnorResult rc = milnor_number(cusp, uv);
  CHECK(rc.isolated);
  CHECK(rc.milnor == 2);
}

TEST_CASE("non-isolated critical loci are detected, not mistyped") {
  // (u + v)^2 is singular along a whole line.
  WPoly f = (xp(Var::x1, 1) + xp(Var::x2, 1)).pow(2);
  MilnorResult res = milnor_number(f, {Var::x1, Var::x2});
  CHECK_FALSE(res.isolated);
}

TEST_CASE("truncation cap controls stabilization honestly") {
  WPoly f = xp(Var::x1, 2) + xp(Var::x2, 2) + xp(Var::x3, 6);
  MilnorOptions tight;
  tight.truncation_cap = 3;
  MilnorResult low = milnor_number(f, kUVW, tight);
  CHECK_FALSE(low.isolated);  // cannot certify below the cap

  MilnorResult full = milnor_number(f, kUVW);
  CHECK(full.isolated);
  CHECK(full.milnor == 5);
  CHECK(full.truncation_used <= 12);
}

TEST_CASE("coefficients must be free of the base parameter") {
  WPoly f = xp(Var::x1, 2) +
            WPoly::term(Monomial::var(Var::x2, 2), TPoly::t());
  CHECK_THROWS_AS(milnor_number(f, kUVW), Error);
}
