#pragma once

#include <string>
#include <vector>

#include "k3fib/cover.hpp"

namespace k3fib {

// Torsion of one graded piece of A over the base ring, presented by the
// square matrix whose columns are the relation multiples f2 * (monomials of
// weighted degree n-2), restricted to the rows of monomials containing y
// (the columns of x-only monomials are the images of the comparison map and
// are quotiented away).  The invariant factors of that matrix are the
// torsion factors.
struct PointTorsion {
  Rational location;
  int multiplicity = 0;            // multiplicity of the point in tau
  std::vector<int> orders;         // vanishing orders of the factors, sorted
  std::vector<int> expected;       // i * multiplicity, with the structural
                                   // multiplicities 4(m-i)+1 / 4(m-i)+3
  bool match = false;
};

struct TorsionReport {
  int degree_n = 0;
  std::vector<TPoly> factors;      // nonunit invariant factors, in
                                   // divisibility order
  std::vector<PointTorsion> per_point;  // rational tau points
  int total_degree = 0;            // sum of factor degrees
  int expected_total_degree = 0;   // structural count times deg d6
  bool match = false;              // totals agree and every rational point
                                   // matches (covers irrational support via
                                   // the degree count)
};

// Requires 2 <= n <= 7.
TorsionReport torsion_decomposition(const RAlgebra& r, int n);

// Display form of a factor localized at a point: "t^2", "(t - 1)^3", "t".
std::string torsion_factor_string(const Rational& location, int order);

// The per-point factor strings of a report, point by point.
std::vector<std::string> torsion_factor_strings(const PointTorsion& pt);

}  // namespace k3fib
