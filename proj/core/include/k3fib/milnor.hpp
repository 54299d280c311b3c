#pragma once

#include <vector>

#include "k3fib/wpoly.hpp"

namespace k3fib {

// Colength computation for the Jacobian ideal of a polynomial germ at the
// origin, by truncated linear algebra: for a truncation degree D, W_D is
// the span of the degree-<= D parts of m * df/dv over monomials m of degree
// <= D, and mu_D = dim V_D - dim W_D.  The sequence is accepted once it is
// unchanged for `stabilization_window` successive D; an isolated critical
// point always stabilizes at its Milnor number, a non-isolated one keeps
// drifting until the cap.
struct MilnorOptions {
  int truncation_cap = 12;
  int stabilization_window = 2;
};

struct MilnorResult {
  bool isolated = false;
  int milnor = -1;        // meaningful iff isolated
  int truncation_used = 0;  // D where it stabilized, or the cap
};

// f must have constant rational coefficients and involve only the listed
// variables (each counted with plain degree one, whatever its weight
// elsewhere in the library).
MilnorResult milnor_number(const WPoly& f, const std::vector<Var>& vars,
                           const MilnorOptions& options = {});

}  // namespace k3fib
