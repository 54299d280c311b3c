#include <doctest.h>

#include <json.hpp>

#include "k3fib/errors.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/pipeline.hpp"

using namespace k3fib;

namespace {

std::string data_path(const std::string& name) {
  return std::string(K3FIB_TEST_DATA) + "/" + name;
}

PipelineResult run_fixture(const std::string& name,
                           PipelineConfig config = {}) {
  return run_pipeline(load_five_tuple(data_path(name + ".json")), config);
}

}  // namespace

TEST_CASE("expected eigenspace ranks follow the closed form") {
  // plus: triangular numbers on even degrees, shifted by 3 on odd ones.
  CHECK(expected_rank_plus(1) == 0);
  CHECK(expected_rank_minus(1) == 3);
  CHECK(expected_rank_plus(2) == 6);
  CHECK(expected_rank_minus(2) == 0);
  CHECK(expected_rank_plus(3) == 1);
  CHECK(expected_rank_minus(3) == 10);
  CHECK(expected_rank_plus(8) == 45);
  CHECK(expected_rank_minus(8) == 21);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(expected_rank_plus(n) + expected_rank_minus(n) == n * n + 2);
  }
}

TEST_CASE("full pipeline verdicts and exit codes") {
  CHECK(run_fixture("fermat").exit_code == 0);
  CHECK(run_fixture("unigonal_r1").exit_code == 0);
  CHECK(run_fixture("cone_vanishing").exit_code == 1);
  CHECK(run_fixture("torsion_r2").exit_code == 1);
  CHECK(run_fixture("irrational_tau").exit_code == 1);
  CHECK_THROWS_AS(run_fixture("noncyclic"), Error);
}

TEST_CASE("pipeline aggregates per-point structure checks") {
  PipelineResult res = run_fixture("unigonal_r1");
  CHECK(res.rank_table_match);
  CHECK(res.dimensions_match);
  CHECK(res.sigma_match);
  CHECK(res.torsion_match);
  CHECK_FALSE(res.torsion_skipped);
  CHECK(res.invariant_violations.empty());
  CHECK(res.checks_failed.empty());
  CHECK(res.admissibility.verdict == "admissible");

  // generic + three samples + the special point
  REQUIRE(res.points.size() == 5);
  CHECK_FALSE(res.points[0].location.has_value());
  CHECK(res.points[0].fibre_type == "generic");
  CHECK(res.points[4].location == Rational(0));
  CHECK(res.points[4].fibre_type == "unigonal");
  CHECK(res.points[1].fibre_type == "hyperelliptic");

  // The special fibre drops comparison-map rank by exactly n(n-1)/2.
  CHECK(res.points[4].sigma_ranks == std::vector<int>{3, 5, 7, 9, 11});
  CHECK(res.points[1].sigma_ranks == std::vector<int>{3, 6, 10, 15, 21});
  CHECK(res.points[4].sigma_match);
}

TEST_CASE("free even part skips torsion") {
  PipelineResult res = run_fixture("fermat");
  CHECK(res.torsion_skipped);
  CHECK(res.torsion.empty());
  CHECK(res.torsion_match);
}

TEST_CASE("failure notes carry locations") {
  PipelineResult res = run_fixture("cone_vanishing");
  CHECK(res.exit_code == 1);
  CHECK(res.admissibility.verdict == "not_admissible");
  bool found = false;
  for (const std::string& line : res.checks_failed)
    found = found || line.find("t = 0") != std::string::npos;
  CHECK(found);
}

TEST_CASE("torsion self-check hook forces an invariant violation") {
  PipelineConfig config;
  config.inject_torsion_error = true;
  PipelineResult res = run_fixture("unigonal_r1", config);
  CHECK(res.exit_code == 3);
  CHECK_FALSE(res.invariant_violations.empty());
  CHECK_FALSE(res.torsion_match);
}

TEST_CASE("json report is canonical and carries the contract fields") {
  PipelineResult res = run_fixture("unigonal_r1");
  const std::string text = emit_report(res, PipelineConfig::Format::json);
  const std::string again =
      emit_report(run_fixture("unigonal_r1"), PipelineConfig::Format::json);
  CHECK(text == again);  // byte-identical across runs
  CHECK(text.back() == '\n');

  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("schema_version") == "1");
  CHECK(doc.at("paper_rank_table_match") == true);
  CHECK(doc.at("verdict") == "admissible");
  CHECK(doc.at("exit_code") == 0);
  CHECK(doc.at("tau").at("points").at(0).at("location") == "0");
  CHECK(doc.at("torsion").at("reports").at(0).at("factors").at(0) == "t");
  CHECK(doc.at("admissibility").at("condition_ii") == "pass_partial");
  const auto& sing = doc.at("admissibility").at("singularity_types").at(0);
  CHECK(sing.at("type") == "A_1");
  CHECK(sing.at("r") == 1);
  CHECK(sing.at("milnor_number") == 1);
  CHECK(sing.at("agrees") == true);
  // No wall-clock or filesystem noise in the canonical report.
  CHECK(text.find("time") == std::string::npos);
  CHECK(text.find("/root") == std::string::npos);
}

TEST_CASE("text report contains the structural dimension row") {
  PipelineResult res = run_fixture("fermat");
  const std::string text = emit_report(res, PipelineConfig::Format::text);
  CHECK(text.find("1 3 6 11 18 27 38") != std::string::npos);
  CHECK(text.find("verdict: admissible") != std::string::npos);
}

TEST_CASE("config degrees extend the checked range") {
  PipelineConfig config;
  config.max_degree = 8;
  config.torsion_degrees = {6, 7};
  PipelineResult res = run_fixture("unigonal_r1", config);
  CHECK(res.exit_code == 0);
  REQUIRE(res.points.size() == 5);
  CHECK(res.points[0].dimensions.size() == 9);
  CHECK(res.points[0].dimensions.back() == 66);
  REQUIRE(res.torsion.size() == 2);
  CHECK(res.torsion[0].degree_n == 6);
  CHECK(res.torsion[1].degree_n == 7);
  CHECK(res.torsion[0].match);
  CHECK(res.torsion[1].match);
}

TEST_CASE("samples landing on the special locus are not double counted") {
  PipelineConfig config;
  config.samples = {Rational(0), Rational(2)};
  PipelineResult res = run_fixture("unigonal_r1", config);
  // generic + two samples, one of which IS the special point
  REQUIRE(res.points.size() == 3);
  CHECK(res.points[1].location == Rational(0));
  CHECK(res.points[1].fibre_type == "unigonal");
  CHECK(res.exit_code == 0);
}
