#pragma once

#include <optional>

#include "k3fib/fibre.hpp"
#include "k3fib/five_tuple.hpp"
#include "k3fib/graded.hpp"
#include "k3fib/presentation.hpp"

namespace k3fib {

// The relative log canonical algebra R = A + z*A of the double cover, with
// z of weight 3 and z^2 = g6.  A is presented by `base`, g6 is the branch
// sextic written in the presentation's generators (z-free, weighted degree
// 6), and tau is the support of the cokernel of the comparison map.
struct RAlgebra {
  FiveTuple input;
  GradedPresentation base;
  TauDivisor tau;
  WPoly g6;

  static constexpr int z_weight = 3;

  WPoly z_relation() const;  // z^2 - g6
};

// Assembles R from a validated tuple.  Throws the presentation errors of
// derive_presentation, Error(Errc::schema_violation) on a malformed beta,
// and Error(Errc::beta_degenerate) when beta lies in the relation ideal
// (the cover would split off a double line: z^2 = 0 on every fibre).
RAlgebra build_r(const FiveTuple& tuple);

// A fibre of R: for c off tau a hyperelliptic model on x1, x2, x3 and z
// alone (y is eliminated), over c in tau the unigonal model keeping y, in
// the normalized coordinates when completing the square succeeded.
struct FibreAlgebra {
  FibreType type;
  GradedPresentation presentation;  // constant coefficients; includes z
  Rational location;
  WPoly quadric;  // unigonal: the (normalized) fibre quadric; else zero
  WPoly sextic;   // z^2 = sextic in the fibre's coordinates
  std::optional<Rational> cone_value;  // unigonal: sextic at x = 0, y = 1
};

FibreAlgebra fibre_at(const RAlgebra& r, const Rational& c);

// Ranks of the two eigenspaces of the covering involution z -> -z on the
// degree-n piece: a monomial is even or odd according to its total degree
// in x1, x2, x3 (y and z are even: both pull back from even data).
// Generic over the base when `at` is empty, else at the fibre over `at`.
struct ParitySplit {
  int degree = 0;
  int plus = 0;
  int minus = 0;
};

ParitySplit parity_split(const RAlgebra& r, int n,
                         const std::optional<Rational>& at = std::nullopt);

// Dimension of the degree-n piece of a fibre of R (plus + minus).
int fibre_dimension(const RAlgebra& r, int n,
                    const std::optional<Rational>& at = std::nullopt);

}  // namespace k3fib
