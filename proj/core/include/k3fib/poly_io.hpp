#pragma once

#include <string>
#include <string_view>

#include "k3fib/wpoly.hpp"

namespace k3fib {

// Which variables a polynomial string may mention.  The base parameter t is
// always legal; the ring variables are gated so that, e.g., matrix entries
// reject x1 and the degree-six datum rejects z with a precise message.
struct PolyGrammar {
  bool allow_x = true;
  bool allow_y = true;
  bool allow_z = false;
  // Name used in error messages ("sigma2[2][4]", "beta", ...).
  std::string field;
};

// Parses the expression grammar
//
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ['^' natural]
//   atom     := rational | variable | '(' expr ')'
//   rational := natural ['/' natural]
//
// over variables {t, x1, x2, x3, y, z} with insignificant whitespace and
// arbitrary-precision integer literals.  '/' occurs only inside rational
// constants; there is no general division.  Throws ParseError carrying the
// byte offset of the offending token and the configured field name.
WPoly parse_poly(std::string_view text, const PolyGrammar& grammar);

// Convenience wrapper for entries of the comparison matrix: only t allowed.
TPoly parse_tpoly(std::string_view text, const std::string& field);

}  // namespace k3fib
