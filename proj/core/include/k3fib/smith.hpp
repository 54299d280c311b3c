#pragma once

#include <vector>

#include "k3fib/poly_matrix.hpp"

namespace k3fib {

// Result of the Smith reduction of a matrix M over Q[t]:
//
//   u * M * v == d,
//
// where u and v are square and unimodular (their determinants are nonzero
// rationals) and d is diagonal with monic entries d_1 | d_2 | ... (zeros, if
// any, trail at the end).
struct SmithDecomposition {
  PolyMatrix u, d, v;

  // The nonzero diagonal entries, in division order.
  std::vector<TPoly> invariant_factors() const;
};

// Full decomposition with both transforms tracked.
//
// Pivot selection is deterministic: among the nonzero candidates of the
// working submatrix, take minimal degree, break ties by smaller coefficient
// height, then by row-major position.  Diagonal entries are normalised to be
// monic at the end.
SmithDecomposition smith_normal_form(const PolyMatrix& m);

// Invariant factors only; skips the transform bookkeeping (about half the
// work for the large torsion presentations).
std::vector<TPoly> smith_invariant_factors(const PolyMatrix& m);

}  // namespace k3fib
