#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fib/rational.hpp"

namespace k3fib {

// Univariate polynomial over Q in the base parameter t, the coefficient ring
// of everything in this library.  Dense storage, lowest power first; the
// invariant is that the highest stored coefficient is nonzero (the zero
// polynomial stores nothing and reports degree -1).
class TPoly {
public:
  TPoly() = default;
  TPoly(long c) : TPoly(Rational(c)) {}  // NOLINT: implicit constant embed
  TPoly(Rational c);                     // NOLINT

  static TPoly t();                           // the monomial t
  static TPoly monomial(int k, Rational c);   // c * t^k
  static TPoly from_coefficients(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return degree() == 0; }
  bool is_one() const { return degree() == 0 && c_[0].is_one(); }

  // Coefficient of t^k; zero beyond the degree.
  const Rational& coeff(int k) const;
  const Rational& leading() const;  // pre: !is_zero()
  const Rational& constant() const { return coeff(0); }

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  TPoly scaled(const Rational& c) const;
  TPoly pow(unsigned k) const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.  Requires b != 0.
  static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
  // Division known to be exact; throws on a nonzero remainder.
  static TPoly divide_exact(const TPoly& a, const TPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static TPoly gcd(TPoly a, TPoly b);

  TPoly monic() const;  // pre: !is_zero()
  Rational eval(const Rational& c) const;
  TPoly derivative() const;
  // p(t + c): recentres the polynomial at the base point c.
  TPoly shifted(const Rational& c) const;
  // Vanishing order at t = c (0 when p(c) != 0).  Requires p != 0.
  int order_at(const Rational& c) const;

  // Largest coefficient height; the secondary pivot-selection key.
  mpz_class height() const;

  std::string str() const;  // canonical form, e.g. "t^3 - t^2 + t"

private:
  void trim();

  std::vector<Rational> c_;
};

}  // namespace k3fib
