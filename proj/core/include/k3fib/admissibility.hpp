#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3fib/branch.hpp"
#include "k3fib/config.hpp"
#include "k3fib/cover.hpp"

namespace k3fib {

enum class CheckStatus { pass, fail, undetermined };

std::string check_status_name(CheckStatus s);

// Condition (ii) is only ever verified through computable proxies (local
// singularity colengths and sampled-sextic reducedness), so its passing
// status reads "pass_partial": the report never claims the full condition.
std::string condition_ii_status_name(CheckStatus s);

// Reducedness of the branch sextic of a sampled (hyperelliptic) fibre.
struct SexticCheck {
  Rational location;
  bool nonzero = false;
  bool reduced = false;
};

// The singularity of the total space over a special point, measured on the
// germ of a hyperplane section through the distinguished point of the
// unigonal fibre.  `expected` is the multiplicity r of the point in tau;
// `agrees` records whether the computed colength equals it.
struct SingularityCheck {
  Rational location;
  int multiplicity = 0;
  bool model_available = false;  // found a slice with unit leading term
  bool isolated = false;
  int milnor = -1;
  int expected = 0;
  bool agrees = false;
};

struct AdmissibilityReport {
  CheckStatus condition_i = CheckStatus::undetermined;   // branch locus
                                                         // avoids the cone
                                                         // points
  CheckStatus condition_ii = CheckStatus::undetermined;  // fibre branch data
                                                         // and singularity
                                                         // types
  std::vector<BranchPoint> cone_points;
  std::vector<SexticCheck> sextics;
  std::vector<SingularityCheck> singularities;
  std::vector<std::string> notes;  // reasons for fail/undetermined entries
  std::string verdict;             // "admissible" | "not_admissible" |
                                   // "undetermined"
};

// Squarefreeness over Q of a nonzero homogeneous form in x1, x2, x3 with
// constant coefficients (no y, z, t).
bool sextic_is_reduced(const WPoly& f);

// Evaluates both admissibility conditions:
//   (i)  every rational special point has nonzero cone value;
//   (ii) the sampled fibre sextics are reduced and nonzero, and each special
//        point's section germ is an isolated singularity whose colength
//        matches the point's multiplicity.
// Condition (ii) can only ever be confirmed partially (finitely many
// samples); disagreement of a finite colength, an unnormalizable fibre, or
// irrational special points leave it undetermined rather than failed.
AdmissibilityReport check_admissibility(const RAlgebra& r,
                                        const PipelineConfig& config);
AdmissibilityReport check_admissibility(const FiveTuple& tuple,
                                        const PipelineConfig& config);

}  // namespace k3fib
