#pragma once

#include <vector>

#include "k3fib/cover.hpp"

namespace k3fib {

// The branch locus data over the special points: for each rational point of
// tau, the value of the fibre's branch sextic at the distinguished cone
// point x = 0, y = 1 of the unigonal fibre.  The covering is disjoint from
// the cone points exactly when every such value is nonzero.
struct BranchPoint {
  Rational location;
  int multiplicity = 0;
  Rational cone_value;
  bool cone_ok = false;  // cone_value != 0
};

struct BranchData {
  std::vector<BranchPoint> points;  // rational tau support, sorted
  bool disjoint = true;             // all listed cone values nonzero
  bool complete = true;             // false when tau has irrational part:
                                    // the listing covers only the rational
                                    // points
};

BranchData branch_data(const RAlgebra& r);

}  // namespace k3fib
