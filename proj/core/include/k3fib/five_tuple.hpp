#pragma once

#include <string>
#include <vector>

#include "k3fib/poly_matrix.hpp"
#include "k3fib/wpoly.hpp"

namespace k3fib {

// The input data of one fibred threefold: the degree-two comparison matrix
// over the base, the twist exponent of the weight-three summand, and the
// degree-six datum.  The two bundle ranks of the underlying 5-tuple are fixed
// at 3 and 1 by the geometry and are implicit in the shapes here.
struct FiveTuple {
  std::string name;    // optional label, carried through to reports
  PolyMatrix sigma2;   // 6x6 over Q[t], columns indexed by the quadric
                       // monomials x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2
  long e3_twist = 0;   // metadata: twist of the weight-three line summand
  WPoly beta;          // weighted-homogeneous of degree 6 in x1..x3, y
};

struct TauPoint {
  Rational location;
  int multiplicity = 0;

  friend bool operator==(const TauPoint&, const TauPoint&) = default;
};

// Vanishing locus of the last invariant factor d6 of sigma2, i.e. the points
// of the base where the cokernel is supported.
struct TauDivisor {
  std::vector<TauPoint> points;  // rational roots, sorted by location
  int degree = 0;                // deg d6, counted with multiplicity
  bool split = true;             // false when d6 has irrational roots; the
                                 // points list then covers only the rational
                                 // part and per-point checks are skipped
  TPoly d6;                      // the factor itself, monic

  friend bool operator==(const TauDivisor&, const TauDivisor&) = default;
};

// Parses the JSON input document:
//
//   {
//     "beta": "<polynomial in x1, x2, x3, y over Q[t]>",
//     "e3_twist": <integer>,
//     "name": "<optional label>",
//     "sigma2": [ [ "<polynomial in t>", ... 6 ], ... 6 ]
//   }
//
// Throws ParseError (with line/column and the offending token) on malformed
// JSON or polynomial strings, and Error(Errc::schema_violation) naming the
// field on structural problems.  Parsing does not validate the mathematics;
// see validate().
FiveTuple parse_five_tuple(const std::string& json_text);
FiveTuple load_five_tuple(const std::string& path);

// Canonical serialization: sorted keys, two-space indent, canonical
// polynomial strings, trailing newline.  parse -> serialize is the identity
// on canonical documents and serialize -> parse always round-trips.
std::string serialize_five_tuple(const FiveTuple& ft);

// Smith data of sigma2 restricted to what downstream stages need.  Throws
// Error(Errc::sigma_not_injective) when det sigma2 == 0 and
// Error(Errc::non_cyclic_cokernel) when any of d1..d5 is a non-unit.
TauDivisor compute_tau(const PolyMatrix& sigma2);

struct ValidationIssue {
  std::string field;
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

// Aggregates every check failure instead of stopping at the first one.
struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate(const FiveTuple& ft);

// Rational roots of p with multiplicities, sorted by location; exact, via
// integer divisor candidates on the scaled polynomial.  Requires p != 0.
// The boolean is true when p splits completely over Q (up to a constant).
std::pair<std::vector<TauPoint>, bool> rational_roots(const TPoly& p);

}  // namespace k3fib
