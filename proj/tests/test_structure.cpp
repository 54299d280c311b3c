#include <doctest.h>

#include <array>

#include "k3fib/errors.hpp"
#include "k3fib/cover.hpp"
#include "k3fib/fibre.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/graded.hpp"
#include "k3fib/presentation.hpp"

using namespace k3fib;

namespace {

std::string data_path(const std::string& name) {
  return std::string(K3FIB_TEST_DATA) + "/" + name;
}

FiveTuple fixture(const std::string& name) {
  return load_five_tuple(data_path(name + ".json"));
}

WPoly xp(Var v, unsigned k) { return WPoly::term(Monomial::var(v, k), TPoly(1)); }

}  // namespace

TEST_CASE("presentation of the identity matrix eliminates y") {
  GradedPresentation pres = derive_presentation(fixture("fermat"));
  CHECK_FALSE(pres.has_y);
  CHECK(pres.relations.empty());
  CHECK(pres.d6 == TPoly(1));
  CHECK(pres.quadric == xp(Var::x3, 2));
  REQUIRE(pres.generators.size() == 3);
  CHECK(pres.generators[0] == std::pair<std::string, int>{"x1", 1});
}

TEST_CASE("presentation with a simple special point") {
  GradedPresentation pres = derive_presentation(fixture("unigonal_r1"));
  CHECK(pres.has_y);
  CHECK(pres.d6 == TPoly::t());
  REQUIRE(pres.relations.size() == 1);
  const WPoly expected = xp(Var::x1, 2) - xp(Var::x2, 2) -
                         WPoly::term(Monomial::var(Var::y),
                                     TPoly::monomial(1, Rational(1)));
  CHECK(pres.relations.front() == expected);
  REQUIRE(pres.generators.size() == 4);
  CHECK(pres.generators[3] == std::pair<std::string, int>{"y", 2});
}

TEST_CASE("presentation with a double special point") {
  GradedPresentation pres = derive_presentation(fixture("torsion_r2"));
  CHECK(pres.has_y);
  CHECK(pres.d6 == TPoly::monomial(2, Rational(1)));
  const WPoly expected =
      xp(Var::x1, 2) -
      WPoly::term(Monomial::var(Var::x2) * Monomial::var(Var::x3), TPoly(1)) -
      WPoly::term(Monomial::var(Var::y), TPoly::monomial(2, Rational(1)));
  REQUIRE(pres.relations.size() == 1);
  CHECK(pres.relations.front() == expected);
}

TEST_CASE("graded pieces have the expected dimensions") {
  // The even part alone: the relation eliminates y degree by degree, so its
  // Hilbert function is that of three weight-one variables, C(n+2, 2).
  const std::vector<int> expected = {1, 3, 6, 10, 15, 21, 28};
  for (const char* name : {"fermat", "unigonal_r1", "torsion_r2"}) {
    CAPTURE(name);
    GradedPresentation pres = derive_presentation(fixture(name));
    CHECK(hilbert_function(pres, 6) == expected);
  }
}

TEST_CASE("graded basis respects fibre evaluation") {
  GradedPresentation pres = derive_presentation(fixture("unigonal_r1"));
  // On the special fibre the relation degenerates to the pure quadric but
  // the dimension count of the even part is unchanged.
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const int at0 = static_cast<int>(graded_basis(pres, n, Rational(0)).size());
    const int at2 = static_cast<int>(graded_basis(pres, n, Rational(2)).size());
    const int generic = static_cast<int>(graded_basis(pres, n).size());
    const int expected = (n + 1) * (n + 2) / 2;
    CHECK(at0 == expected);
    CHECK(at2 == expected);
    CHECK(generic == expected);
  }
}

TEST_CASE("reduction by the presentation relation") {
  GradedPresentation pres = derive_presentation(fixture("unigonal_r1"));
  const WPoly rel = pres.relations.front();

  // x1^6 reduces to (x2^2 + t y)^3, with no multiple of x1^2 left behind
  const WPoly reduced = reduce_by_relation(xp(Var::x1, 6), rel);
  const WPoly target = (xp(Var::x2, 2) + WPoly::term(Monomial::var(Var::y),
                                                     TPoly::monomial(1, Rational(1))))
                           .pow(3);
  CHECK(reduced == target);
  CHECK(reduce_by_relation(reduced, rel) == reduced);  // idempotent
  for (const auto& [m, c] : reduced.terms()) CHECK(m.exp(Var::x1) < 2);

  // Reduction only subtracts multiples of the relation.
  const WPoly diff = xp(Var::x1, 6) - reduced;
  const WPoly again = reduce_by_relation(diff, rel);
  CHECK(again.is_zero());
}

TEST_CASE("coordinates invert the basis expansion") {
  GradedPresentation pres = derive_presentation(fixture("unigonal_r1"));
  GradedBasis basis = graded_basis(pres, 4, Rational(1));
  const WPoly rel = pres.relations.front().eval_t(Rational(1));
  WPoly f = reduce_by_relation(
      xp(Var::x1, 4) + xp(Var::x2, 4).scaled(Rational(7, 3)) -
          WPoly::term(Monomial::var(Var::y, 2), TPoly(2)),
      rel);
  const auto coords = rational_coordinates(f, basis.monomials);
  WPoly back;
  for (std::size_t i = 0; i < coords.size(); ++i)
    back += WPoly::term(basis.monomials[i], TPoly(1)).scaled(coords[i]);
  CHECK(back == f);
}

TEST_CASE("cover algebra of the bundled families") {
  SUBCASE("free even part keeps the degree-six datum intact") {
    RAlgebra r = build_r(fixture("fermat"));
    CHECK(r.g6 == xp(Var::x1, 6) + xp(Var::x2, 6) + xp(Var::x3, 6));
    const WPoly zrel = r.z_relation();
    CHECK(zrel == xp(Var::z, 2) - r.g6);
    CHECK(r.tau.points.empty());
  }
  SUBCASE("sectioned even part") {
    RAlgebra r = build_r(fixture("unigonal_r1"));
    CHECK(r.g6 == WPoly::term(Monomial::var(Var::y, 3), TPoly(1)) +
                      xp(Var::x3, 6));
    REQUIRE(r.tau.points.size() == 1);
    CHECK(r.tau.points[0].multiplicity == 1);
  }
}

TEST_CASE("degree-six datum that dies on the double cover is rejected") {
  // With q = x1^2 - x2^2 and d6 = t, the combination t^3*y^3 - q^3 is
  // weighted-homogeneous of degree 6 and nonzero, yet collapses to zero in
  // the quotient (substituting y = q/d6 kills it identically).
  FiveTuple ft = fixture("unigonal_r1");
  ft.beta = WPoly::term(Monomial::var(Var::y, 3),
                        TPoly::monomial(3, Rational(1))) -
            (xp(Var::x1, 2) - xp(Var::x2, 2)).pow(3);
  try {
    build_r(ft);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::beta_degenerate);
  }
}

TEST_CASE("fibres of the free family are hyperelliptic everywhere") {
  RAlgebra r = build_r(fixture("fermat"));
  FibreAlgebra f = fibre_at(r, Rational(5));
  CHECK_FALSE(f.type.is_unigonal());
  CHECK(f.sextic == xp(Var::x1, 6) + xp(Var::x2, 6) + xp(Var::x3, 6));
  CHECK_FALSE(f.cone_value.has_value());
}

TEST_CASE("special fibre is unigonal with normalized quadric") {
  RAlgebra r = build_r(fixture("unigonal_r1"));
  FibreAlgebra f = fibre_at(r, Rational(0));
  REQUIRE(f.type.is_unigonal());
  REQUIRE(f.type.unigonal.has_value());
  CHECK(f.type.unigonal->normalized);
  CHECK(f.type.unigonal->a == Rational(1));
  CHECK(f.type.unigonal->b == Rational(0));
  CHECK(f.type.unigonal->r == 1);
  CHECK(f.quadric == xp(Var::x1, 2) - xp(Var::x2, 2));
  REQUIRE(f.cone_value.has_value());
  CHECK(*f.cone_value == Rational(1));
}

TEST_CASE("hyperelliptic fibres substitute the section") {
  RAlgebra r = build_r(fixture("unigonal_r1"));
  FibreAlgebra f = fibre_at(r, Rational(2));
  CHECK_FALSE(f.type.is_unigonal());
  // y = (x1^2 - x2^2)/2 on this fibre, so the sextic is
  // ((x1^2 - x2^2)/2)^3 + x3^6.
  const WPoly expected =
      (xp(Var::x1, 2) - xp(Var::x2, 2)).pow(3).scaled(Rational(1, 8)) +
      xp(Var::x3, 6);
  CHECK(f.sextic == expected);
}

TEST_CASE("quadric normalization cases") {
  SUBCASE("already normal") {
    auto norm = normalize_unigonal_quadric(xp(Var::x1, 2) - xp(Var::x2, 2));
    CHECK(norm.ok);
    CHECK(norm.a == Rational(1));
    CHECK(norm.b == Rational(0));
  }
  SUBCASE("rank-3 quadric x1^2 - x2*x3") {
    auto norm = normalize_unigonal_quadric(
        xp(Var::x1, 2) -
        WPoly::term(Monomial::var(Var::x2) * Monomial::var(Var::x3), TPoly(1)));
    CHECK(norm.ok);
    CHECK(norm.a == Rational(0));
    CHECK(norm.b == Rational(1));
  }
  SUBCASE("needs a coordinate probe") {
    // 2 x1^2 - x2^2: no standard vector squares to a rational square until
    // the probe hits x1 + x2 with value 1.
    auto norm = normalize_unigonal_quadric(xp(Var::x1, 2).scaled(Rational(2)) -
                                           xp(Var::x2, 2));
    CHECK(norm.ok);
  }
  SUBCASE("irrational discriminant is flagged, not fudged") {
    // x1^2 - x2^2 - x2*x3 - x3^2: the residual form x2^2 + x2*x3 + x3^2 has
    // discriminant -3, so splitting it needs a quadratic extension.
    auto norm = normalize_unigonal_quadric(
        xp(Var::x1, 2) - xp(Var::x2, 2) -
        WPoly::term(Monomial::var(Var::x2) * Monomial::var(Var::x3), TPoly(1)) -
        xp(Var::x3, 2));
    CHECK_FALSE(norm.ok);
  }
  SUBCASE("rank-one quadric has no unigonal normal form") {
    CHECK_THROWS_AS(normalize_unigonal_quadric(xp(Var::x1, 2)), Error);
  }
}

TEST_CASE("linear substitution transforms quadrics exactly") {
  QMatrix swap12(3, 3);
  swap12.at(0, 1) = Rational(1);
  swap12.at(1, 0) = Rational(1);
  swap12.at(2, 2) = Rational(1);
  const WPoly q = xp(Var::x1, 2) - xp(Var::x2, 2);
  CHECK(substitute_linear(q, swap12) == xp(Var::x2, 2) - xp(Var::x1, 2));
}

TEST_CASE("parity split matches the structural rank table") {
  // (plus, minus) per degree 1..8; both parities total n^2 + 2.
  const std::array<std::pair<int, int>, 8> table = {{{0, 3},
                                                     {6, 0},
                                                     {1, 10},
                                                     {15, 3},
                                                     {6, 21},
                                                     {28, 10},
                                                     {15, 36},
                                                     {45, 21}}};
  for (const char* name : {"fermat", "unigonal_r1"}) {
    CAPTURE(name);
    RAlgebra r = build_r(fixture(name));
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(n);
      ParitySplit generic = parity_split(r, n);
      CHECK(generic.plus == table[n - 1].first);
      CHECK(generic.minus == table[n - 1].second);
      ParitySplit sampled = parity_split(r, n, Rational(2));
      CHECK(sampled.plus == table[n - 1].first);
      CHECK(sampled.minus == table[n - 1].second);
    }
  }
  // Same table on the special fibre.
  RAlgebra r = build_r(fixture("unigonal_r1"));
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    ParitySplit at0 = parity_split(r, n, Rational(0));
    CHECK(at0.plus == table[n - 1].first);
    CHECK(at0.minus == table[n - 1].second);
    CHECK(fibre_dimension(r, n, Rational(0)) == n * n + 2);
  }
}
