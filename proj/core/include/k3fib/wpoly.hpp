#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "k3fib/tpoly.hpp"

namespace k3fib {

// Variables of the weighted coordinate ring over the base.  x1, x2, x3 have
// weight 1, y has weight 2 and z has weight 3; the base parameter t carries
// weight 0 and lives in the coefficients (TPoly), not here.
enum class Var : int { x1 = 0, x2 = 1, x3 = 2, y = 3, z = 4 };

inline constexpr int kVarCount = 5;
inline constexpr std::array<int, kVarCount> kWeights = {1, 1, 1, 2, 3};

const char* var_name(Var v);

// Exponent vector of a monomial in (x1, x2, x3, y, z).
struct Monomial {
  std::array<std::uint16_t, kVarCount> e{};

  static Monomial one() { return {}; }
  static Monomial var(Var v, std::uint16_t k = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(v)] = k;
    return m;
  }

  std::uint16_t exp(Var v) const { return e[static_cast<std::size_t>(v)]; }
  int weighted_degree() const;
  int total_x_degree() const { return e[0] + e[1] + e[2]; }
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Componentwise difference; requires divides(m) to have been checked.
  Monomial quotient_into(const Monomial& m) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const;  // "1" or e.g. "x1^2*x2*y"
};

// Plain lexicographic order on the exponent array: the std::map key order.
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.e < b.e;
  }
};

// Graded lexicographic order with x1 > x2 > x3 > y > z, the weighted degree
// taken first.  This is the monomial order every reduction in the library
// uses.
bool grlex_less(const Monomial& a, const Monomial& b);

// Polynomial in (x1, x2, x3, y, z) with TPoly coefficients: an element of
// Q[t][x1, x2, x3, y, z].  Term map keeps only nonzero coefficients.
class WPoly {
public:
  using TermMap = std::map<Monomial, TPoly, MonomialLexLess>;

  WPoly() = default;

  static WPoly constant(TPoly c);
  static WPoly constant(const Rational& c) { return constant(TPoly(c)); }
  static WPoly variable(Var v) { return term(Monomial::var(v), TPoly(1)); }
  static WPoly term(const Monomial& m, TPoly c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of an exact monomial (zero TPoly when absent).
  const TPoly& coeff(const Monomial& m) const;

  WPoly operator-() const;
  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  WPoly& operator*=(const WPoly& o) { return *this = *this * o; }
  WPoly scaled(const TPoly& c) const;
  WPoly scaled(const Rational& c) const { return scaled(TPoly(c)); }
  WPoly pow(unsigned k) const;

  friend bool operator==(const WPoly& a, const WPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const Monomial& m, const TPoly& c);

  // Weighted degree bookkeeping.  A zero polynomial is homogeneous of every
  // degree; weighted_degree() returns nullopt for it.
  std::optional<int> weighted_degree() const;  // max over terms
  bool is_weighted_homogeneous() const;
  bool is_weighted_homogeneous(int d) const;

  bool uses(Var v) const;
  int degree_in(Var v) const;
  // True when every coefficient is constant in t.
  bool t_free() const;

  // Substitutions.  eval_t fixes the base parameter; substitute replaces a
  // ring variable by an arbitrary polynomial (expanding powers exactly).
  WPoly eval_t(const Rational& c) const;
  WPoly substitute(Var v, const WPoly& value) const;
  // Full evaluation at a rational point (x1, x2, x3, y, z; t).
  Rational eval_point(const std::array<Rational, kVarCount>& xs,
                      const Rational& t) const;

  WPoly derivative(Var v) const;

  // Grlex-largest monomial present.  Requires a nonzero polynomial.
  const Monomial& grlex_leading() const;

  std::string str() const;  // canonical, grlex-descending term order

private:
  TermMap terms_;
};

}  // namespace k3fib
