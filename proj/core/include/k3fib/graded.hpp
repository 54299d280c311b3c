#pragma once

#include <optional>
#include <vector>

#include "k3fib/presentation.hpp"
#include "k3fib/wpoly.hpp"

namespace k3fib {

// Monomial basis of one graded piece of a presented algebra, graded-lex
// descending (the canonical order used by every matrix in this library).
struct GradedBasis {
  int degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

// All monomials of weighted degree n in x1, x2, x3 and, when with_y is set,
// y (weight 2); graded-lex descending.  No z.
std::vector<Monomial> weighted_monomials(int n, bool with_y);

// Basis of the degree-n piece: monomials in the presentation's generators
// not divisible by the leading monomial of the relation — generically over
// the base when `at` is empty, in the fibre over `at` otherwise.  Throws
// Error(Errc::degenerate_fibre) if the relation vanishes identically at a
// requested fibre.
GradedBasis graded_basis(const GradedPresentation& pres, int n,
                         const std::optional<Rational>& at = std::nullopt);

// Dimensions of the graded pieces in degrees 0..max_degree (generic fibre).
std::vector<int> hilbert_function(const GradedPresentation& pres,
                                  int max_degree);

// Remainder of f under division by a single relation in graded-lex order.
// The relation's leading coefficient must be a nonzero rational constant;
// throws Error(Errc::unit_leading_required) otherwise.
WPoly reduce_by_relation(WPoly f, const WPoly& rel);

// Coordinates of f in the given monomial basis; throws internal if a term
// of f lies outside the basis.
std::vector<TPoly> coordinates(const WPoly& f,
                               const std::vector<Monomial>& basis);
std::vector<Rational> rational_coordinates(const WPoly& f,
                                           const std::vector<Monomial>& basis);

}  // namespace k3fib
