#include <doctest.h>

#include <fstream>
#include <sstream>

#include "k3fib/errors.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/poly_io.hpp"

using namespace k3fib;

namespace {

std::string data_path(const std::string& name) {
  return std::string(K3FIB_TEST_DATA) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Errc code_of(const std::string& json_text) {
  try {
    parse_five_tuple(json_text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse or schema error");
  return Errc::internal;
}

}  // namespace

TEST_CASE("polynomial grammar accepts the documented forms") {
  PolyGrammar g;
  g.allow_y = true;
  CHECK(parse_poly("x1^2 - x2^2", g) ==
        WPoly::term(Monomial::var(Var::x1, 2), TPoly(1)) -
            WPoly::term(Monomial::var(Var::x2, 2), TPoly(1)));
  CHECK(parse_poly("3/2*t*y", g) ==
        WPoly::term(Monomial::var(Var::y), TPoly::monomial(1, Rational(3, 2))));
  CHECK(parse_poly("(x1 + x2)^2", g) ==
        parse_poly("x1^2 + 2*x1*x2 + x2^2", g));
  CHECK(parse_poly("-t^2 + 2", g) ==
        WPoly::constant(TPoly::monomial(2, Rational(-1)) + TPoly(2)));
}

TEST_CASE("polynomial grammar rejects out-of-scope input") {
  PolyGrammar g;
  g.allow_y = false;  // x stays allowed, y and z are gated off
  CHECK_THROWS_AS(parse_poly("q + 1", g), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 +", g), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", g), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 x2", g), ParseError);  // '*' is required
  CHECK_THROWS_AS(parse_poly("y", g), ParseError);
  CHECK_THROWS_AS(parse_poly("z", g), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^99999", g), ParseError);
}

TEST_CASE("bundled inputs parse and validate cleanly") {
  for (const char* name : {"fermat", "unigonal_r1", "cone_vanishing",
                           "torsion_r2", "torsion_r3", "irrational_tau"}) {
    CAPTURE(name);
    FiveTuple ft = load_five_tuple(data_path(std::string(name) + ".json"));
    CHECK(ft.name == name);
    CHECK(ft.e3_twist == -4);
    ValidationReport report = validate(ft);
    CHECK(report.ok);
    CHECK(report.issues.empty());
  }
}

TEST_CASE("serialization round-trips and is idempotent") {
  const std::string text = slurp(data_path("unigonal_r1.json"));
  FiveTuple ft = parse_five_tuple(text);
  const std::string once = serialize_five_tuple(ft);
  FiveTuple again = parse_five_tuple(once);
  CHECK(serialize_five_tuple(again) == once);
  CHECK(again.name == ft.name);
  CHECK(again.e3_twist == ft.e3_twist);
  CHECK(again.beta == ft.beta);
  CHECK(again.sigma2 == ft.sigma2);
}

TEST_CASE("schema violations are reported with the right class") {
  CHECK(code_of("[1, 2]") == Errc::schema_violation);
  CHECK(code_of("{\"e3_twist\": 0, \"beta\": \"y^3\"}") ==
        Errc::schema_violation);  // sigma2 missing
  CHECK(code_of("{\"sigma2\": [], \"e3_twist\": 0, \"beta\": \"y^3\"}") ==
        Errc::schema_violation);
  CHECK(code_of("{\"sigma2\": 3, \"e3_twist\": 0, \"beta\": \"y^3\"}") ==
        Errc::schema_violation);
  CHECK(code_of("{\"surprise\": 1}") == Errc::schema_violation);
  CHECK(code_of("{broken") == Errc::parse_error);
  CHECK(code_of("{\"sigma2\": [[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"],"
                "[\"0\",\"1\",\"0\",\"0\",\"0\",\"0\"],"
                "[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\"],"
                "[\"0\",\"0\",\"0\",\"1\",\"0\",\"0\"],"
                "[\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"],"
                "[\"0\",\"0\",\"0\",\"0\",\"0\",\"oops\"]],"
                "\"e3_twist\": 0, \"beta\": \"y^3\"}") == Errc::parse_error);
}

TEST_CASE("validation flags non-homogeneous and out-of-scope beta") {
  const std::string base =
      "{\"sigma2\": [[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"],"
      "[\"0\",\"1\",\"0\",\"0\",\"0\",\"0\"],"
      "[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\"],"
      "[\"0\",\"0\",\"0\",\"1\",\"0\",\"0\"],"
      "[\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"],"
      "[\"0\",\"0\",\"0\",\"0\",\"0\",\"1\"]],"
      "\"e3_twist\": 0, \"beta\": \"BETA\"}";
  auto with_beta = [&](const std::string& b) {
    std::string text = base;
    text.replace(text.find("BETA"), 4, b);
    return parse_five_tuple(text);
  };
  CHECK_FALSE(validate(with_beta("x1^2")).ok);       // degree 2, not 6
  CHECK_FALSE(validate(with_beta("x1^6 + y^2")).ok); // mixed degrees 6 and 4
  CHECK_FALSE(validate(with_beta("0")).ok);          // zero datum
  CHECK(validate(with_beta("y^3 + x3^6")).ok);
}

TEST_CASE("tau divisor of the bundled matrices") {
  SUBCASE("identity matrix has empty special locus") {
    FiveTuple ft = load_five_tuple(data_path("fermat.json"));
    TauDivisor tau = compute_tau(ft.sigma2);
    CHECK(tau.degree == 0);
    CHECK(tau.split);
    CHECK(tau.points.empty());
    CHECK(tau.d6 == TPoly(1));
  }
  SUBCASE("single simple point") {
    FiveTuple ft = load_five_tuple(data_path("unigonal_r1.json"));
    TauDivisor tau = compute_tau(ft.sigma2);
    CHECK(tau.degree == 1);
    CHECK(tau.split);
    REQUIRE(tau.points.size() == 1);
    CHECK(tau.points[0] == TauPoint{Rational(0), 1});
    CHECK(tau.d6 == TPoly::t());
  }
  SUBCASE("double point") {
    FiveTuple ft = load_five_tuple(data_path("torsion_r2.json"));
    TauDivisor tau = compute_tau(ft.sigma2);
    CHECK(tau.degree == 2);
    REQUIRE(tau.points.size() == 1);
    CHECK(tau.points[0] == TauPoint{Rational(0), 2});
  }
  SUBCASE("irrational locus is flagged as non-split") {
    FiveTuple ft = load_five_tuple(data_path("irrational_tau.json"));
    TauDivisor tau = compute_tau(ft.sigma2);
    CHECK(tau.degree == 2);
    CHECK_FALSE(tau.split);
    CHECK(tau.points.empty());
  }
  SUBCASE("non-cyclic cokernel is rejected") {
    FiveTuple ft = load_five_tuple(data_path("noncyclic.json"));
    CHECK_THROWS_AS(compute_tau(ft.sigma2), Error);
    try {
      compute_tau(ft.sigma2);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::non_cyclic_cokernel);
    }
  }
  SUBCASE("singular matrix is rejected") {
    FiveTuple ft = load_five_tuple(data_path("fermat.json"));
    ft.sigma2.at(5, 5) = TPoly();  // kill the last pivot
    try {
      compute_tau(ft.sigma2);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::sigma_not_injective);
    }
  }
}

TEST_CASE("rational root extraction") {
  auto roots_of = [](const TPoly& p) { return rational_roots(p); };

  auto [r1, split1] = roots_of(TPoly::t() * TPoly::t() *
                               (TPoly::t() - TPoly(1)));  // t^2 (t - 1)
  CHECK(split1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == TauPoint{Rational(0), 2});
  CHECK(r1[1] == TauPoint{Rational(1), 1});

  auto [r2, split2] = roots_of(TPoly::monomial(2, Rational(1)) + TPoly(1));
  CHECK_FALSE(split2);  // t^2 + 1
  CHECK(r2.empty());

  // 2t - 1 has the fractional root 1/2
  auto [r3, split3] =
      roots_of(TPoly::monomial(1, Rational(2)) - TPoly(1));
  CHECK(split3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0] == TauPoint{Rational(1, 2), 1});

  // (t + 3)(2t - 1) = 2t^2 + 5t - 3
  auto [r4, split4] = roots_of(TPoly::monomial(2, Rational(2)) +
                               TPoly::monomial(1, Rational(5)) - TPoly(3));
  CHECK(split4);
  REQUIRE(r4.size() == 2);
  CHECK(r4[0] == TauPoint{Rational(-3), 1});
  CHECK(r4[1] == TauPoint{Rational(1, 2), 1});
}
