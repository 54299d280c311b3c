#pragma once

#include <optional>
#include <string>

#include "k3fib/qmatrix.hpp"
#include "k3fib/wpoly.hpp"

namespace k3fib {

// Data of a degree-two fibre over a point of multiplicity r on the
// discriminant divisor: coordinates are normalized so the fibre quadric is
//
//   x1^2 - x2 * (a * x2 + b * x3),      (a, b) != (0, 0).
//
// Completing the square needs a rational square value of the quadric; when
// the deterministic search fails, `normalized` is false, (a, b) are
// meaningless, and downstream consumers must work with the raw quadric
// (the fibre is then reported as needing a field extension).
struct UnigonalParams {
  bool normalized = false;
  Rational a;
  Rational b;
  int r = 1;  // multiplicity of the supporting point; always meaningful
};

struct FibreType {
  enum class Tag { hyperelliptic, unigonal };
  Tag tag = Tag::hyperelliptic;
  std::optional<UnigonalParams> unigonal;  // engaged iff tag == unigonal

  bool is_unigonal() const { return tag == Tag::unigonal; }
  std::string tag_name() const {
    return is_unigonal() ? "unigonal" : "hyperelliptic";
  }
};

// Result of normalizing a unigonal fibre quadric.  `transform` is the
// change of coordinates on (x1, x2, x3): old variables in terms of new,
// x_old = transform * x_new, so substituting it into the input quadric
// yields x1^2 - a*x2^2 - b*x2*x3 exactly (verified internally).
struct QuadricNormalization {
  bool ok = false;
  Rational a;
  Rational b;
  QMatrix transform{3, 3};
};

// Completes the square over the rationals.  Throws
// Error(Errc::degenerate_fibre) when the quadric is zero or of rank one
// (no valid (a, b) exists for any choice of coordinates); returns
// ok = false when normalization exists only over an extension field.
QuadricNormalization normalize_unigonal_quadric(const WPoly& quadric);

// f(transform * x): substitutes each xi by the linear combination given by
// row i of the matrix; y, z and base coefficients are untouched.
WPoly substitute_linear(const WPoly& f, const QMatrix& transform);

}  // namespace k3fib
