#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fib/five_tuple.hpp"
#include "k3fib/wpoly.hpp"

namespace k3fib {

// Presentation of a graded algebra by weighted generators and relations.
// For the degree-(1,2) subalgebra this is
//
//   A  =  O[x1, x2, x3, y] / (f2),     f2 = q(x1, x2, x3; t) - d6(t) * y,
//
// with q a quadric over the base ring and d6 the last invariant factor of
// the comparison matrix; when d6 is a unit, y is eliminated and A is the
// free polynomial algebra on x1, x2, x3.  Fibre algebras reuse the same
// struct with constant coefficients and, there, the weight-3 generator z.
struct GradedPresentation {
  std::vector<std::pair<std::string, int>> generators;  // (name, weight)
  std::vector<WPoly> relations;  // weighted-homogeneous
  std::string chart = "t";      // marker for the affine base chart

  // Derived working data for the y-presentation (meaningful for A and its
  // fibres, not for the z-extended fibre presentations):
  bool has_y = false;  // y survives iff d6 is not a unit
  WPoly quadric;       // q; kept also when !has_y, where y = q / d6 globally
  TPoly d6;            // monic last invariant factor (== 1 when !has_y)
};

// Reads the presentation off the Smith decomposition of sigma2: a basis
// change in the degree-two bundle makes five basis elements images of
// quadrics and leaves one generator y with the single relation f2.
//
// Normalization fixing the remaining freedom: d6 is the monic Smith factor;
// q is scaled so the rational coefficient of its graded-lex leading monomial
// is 1 (a matching rescale of y keeps the relation shape q - d6 * y).
//
// Throws Error(Errc::sigma_not_injective) and
// Error(Errc::non_cyclic_cokernel) like compute_tau.
GradedPresentation derive_presentation(const FiveTuple& tuple);

// The six quadric monomials in the column order of sigma2:
// x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2.
extern const Monomial kQuadricMonomials[6];

}  // namespace k3fib
