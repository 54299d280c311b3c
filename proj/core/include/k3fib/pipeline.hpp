#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3fib/admissibility.hpp"
#include "k3fib/config.hpp"
#include "k3fib/torsion.hpp"

namespace k3fib {

// One degree of the eigenspace rank table at one fibre (or generically).
struct RankRow {
  int degree = 0;
  int plus = 0;
  int minus = 0;
  int expected_plus = 0;
  int expected_minus = 0;
  bool match = false;
};

// The structural rank table: +/- eigenspace dimensions by degree parity.
int expected_rank_plus(int n);
int expected_rank_minus(int n);

// Graded checks of one fibre (or of the generic fibre when `location` is
// empty): eigenspace ranks against the structural table, total dimensions
// against n^2 + 2, and full column rank of the degree-n comparison maps.
struct PointReport {
  std::optional<Rational> location;
  std::string fibre_type;  // "generic", "hyperelliptic" or "unigonal"
  std::vector<RankRow> ranks;
  bool ranks_match = false;
  std::vector<int> dimensions;  // degrees 0..max
  bool dimensions_match = false;
  std::vector<int> sigma_ranks;  // degrees 1..min(5, max); empty generically
  bool sigma_match = false;
};

struct PipelineResult {
  FiveTuple input;
  GradedPresentation base;
  TauDivisor tau;
  WPoly g6;
  std::vector<PointReport> points;  // generic, then samples, then special
  std::vector<TorsionReport> torsion;
  bool torsion_skipped = false;  // free module: no torsion to check
  BranchData branch;
  AdmissibilityReport admissibility;

  bool rank_table_match = false;
  bool dimensions_match = false;
  bool torsion_match = false;
  bool sigma_match = false;

  // Violations of theory-guaranteed identities (any entry means the library
  // itself, not the input, is at fault: exit code 3).  checks_failed lists
  // honest negative outcomes of the admissibility checks (exit code 1).
  std::vector<std::string> invariant_violations;
  std::vector<std::string> checks_failed;
  int exit_code = 0;  // 0 all pass, 1 checks failed, 3 invariant violation
};

// Runs validation, the graded/parity/torsion/branch checks and the
// admissibility decision.  Construction errors (bad input data) are thrown;
// check outcomes land in the result.
PipelineResult run_pipeline(const FiveTuple& tuple,
                            const PipelineConfig& config);

// Renders a result as a text page or as canonical JSON (stable key order,
// two-space indent, trailing newline; schema_version "1").
std::string emit_report(const PipelineResult& result,
                        PipelineConfig::Format format);

}  // namespace k3fib
