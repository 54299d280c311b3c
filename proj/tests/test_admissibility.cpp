#include <doctest.h>

#include <algorithm>

#include "k3fib/admissibility.hpp"
#include "k3fib/five_tuple.hpp"

using namespace k3fib;

namespace {

std::string data_path(const std::string& name) {
  return std::string(K3FIB_TEST_DATA) + "/" + name;
}

AdmissibilityReport report_for(const std::string& name) {
  FiveTuple ft = load_five_tuple(data_path(name + ".json"));
  return check_admissibility(ft, PipelineConfig{});
}

WPoly xp(Var v, unsigned k) { return WPoly::term(Monomial::var(v, k), TPoly(1)); }

bool any_note_mentions(const AdmissibilityReport& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) {
                       return n.find(text) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("sextic reducedness detection") {
  CHECK(sextic_is_reduced(xp(Var::x1, 6) + xp(Var::x2, 6) + xp(Var::x3, 6)));
  CHECK(sextic_is_reduced(xp(Var::x1, 6) + xp(Var::x2, 6)));  // distinct lines
  CHECK_FALSE(sextic_is_reduced(xp(Var::x1, 2) * xp(Var::x2, 4)));
  CHECK_FALSE(sextic_is_reduced(
      (xp(Var::x1, 1) + xp(Var::x2, 1)).pow(2) * xp(Var::x3, 4)));
  CHECK_FALSE(sextic_is_reduced(
      (xp(Var::x1, 2) +
       WPoly::term(Monomial::var(Var::x2) * Monomial::var(Var::x3), TPoly(1)))
          .pow(3)));
  CHECK_FALSE(sextic_is_reduced(WPoly()));
  // A squarefree product of non-coprime-looking factors.
  CHECK(sextic_is_reduced(
      (xp(Var::x1, 2) - xp(Var::x2, 2)) *
      (xp(Var::x1, 2) + xp(Var::x2, 2)) *
      (xp(Var::x1, 2) - WPoly::term(
                            Monomial::var(Var::x2) * Monomial::var(Var::x3),
                            TPoly(1)))));
}

TEST_CASE("smooth hyperelliptic family is admissible") {
  AdmissibilityReport r = report_for("fermat");
  CHECK(r.condition_i == CheckStatus::pass);
  CHECK(r.condition_ii == CheckStatus::pass);
  CHECK(condition_ii_status_name(r.condition_ii) == "pass_partial");
  CHECK(r.verdict == "admissible");
  CHECK(r.cone_points.empty());
  CHECK(r.singularities.empty());
  CHECK_FALSE(r.sextics.empty());
  for (const SexticCheck& s : r.sextics) {
    CHECK(s.nonzero);
    CHECK(s.reduced);
  }
}

TEST_CASE("simple unigonal family is admissible with a matching A_1 germ") {
  AdmissibilityReport r = report_for("unigonal_r1");
  CHECK(r.condition_i == CheckStatus::pass);
  CHECK(r.condition_ii == CheckStatus::pass);
  CHECK(r.verdict == "admissible");
  REQUIRE(r.cone_points.size() == 1);
  CHECK(r.cone_points.front().cone_ok);
  CHECK(r.cone_points.front().cone_value == Rational(1));
  REQUIRE(r.singularities.size() == 1);
  const SingularityCheck& s = r.singularities.front();
  CHECK(s.location == Rational(0));
  CHECK(s.multiplicity == 1);
  CHECK(s.model_available);
  CHECK(s.isolated);
  CHECK(s.milnor == 1);
  CHECK(s.expected == 1);
  CHECK(s.agrees);
}

TEST_CASE("datum vanishing at the cone point fails condition (i)") {
  AdmissibilityReport r = report_for("cone_vanishing");
  CHECK(r.condition_i == CheckStatus::fail);
  CHECK(r.verdict == "not_admissible");
  REQUIRE(r.cone_points.size() == 1);
  CHECK_FALSE(r.cone_points.front().cone_ok);
  CHECK(r.cone_points.front().cone_value == Rational(0));
  CHECK(any_note_mentions(r, "t = 0"));
}

TEST_CASE("higher multiplicity germ disagreement stays undetermined") {
  AdmissibilityReport r = report_for("torsion_r2");
  CHECK(r.condition_i == CheckStatus::pass);
  CHECK(r.condition_ii == CheckStatus::undetermined);
  CHECK(r.verdict == "undetermined");
  REQUIRE(r.singularities.size() == 1);
  CHECK(r.singularities.front().multiplicity == 2);
  CHECK(r.singularities.front().milnor == 3);
  CHECK_FALSE(r.singularities.front().agrees);
}

TEST_CASE("irrational special locus is reported, not glossed over") {
  AdmissibilityReport r = report_for("irrational_tau");
  CHECK(r.condition_i == CheckStatus::pass);
  CHECK(r.condition_ii == CheckStatus::undetermined);
  CHECK(r.verdict == "undetermined");
  CHECK(any_note_mentions(r, "irrational"));
}

TEST_CASE("status names") {
  CHECK(check_status_name(CheckStatus::pass) == "pass");
  CHECK(check_status_name(CheckStatus::fail) == "fail");
  CHECK(check_status_name(CheckStatus::undetermined) == "undetermined");
  CHECK(condition_ii_status_name(CheckStatus::pass) == "pass_partial");
  CHECK(condition_ii_status_name(CheckStatus::fail) == "fail");
}
