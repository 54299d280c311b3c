#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace k3fib {

// Exact rational number.  Thin value wrapper over GMP's mpq_class whose
// constructors canonicalise, so every reachable value is reduced and has a
// positive denominator.  All arithmetic is exact; nothing here ever rounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int -> Q
  Rational(long num, long den) : v_(num, den) { canonical(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    canonical();
  }

  // Accepts an optional sign, an integer, or "p/q" with q != 0.  Returns
  // nullopt on any other shape; never throws.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  Rational inverse() const;  // pre: nonzero

  // max(|num|, den): the usual naive height, used for pivot tie-breaking.
  mpz_class height() const;

  // True iff the value is the square of a rational, i.e. it is nonnegative
  // and both num and den are perfect squares.  sqrt() requires is_square().
  bool is_square() const;
  Rational sqrt() const;

  std::string str() const;  // "p" or "p/q", canonical

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  void canonical() { v_.canonicalize(); }

  mpq_class v_;
};

inline Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

inline Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

inline mpz_class Rational::height() const {
  mpz_class n = abs(num());
  return n > den() ? n : den();
}

inline bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(den().get_mpz_t()) != 0;
}

inline Rational Rational::sqrt() const {
  if (!is_square()) throw std::domain_error("Rational: sqrt of a non-square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
  return Rational(rn, rd);
}

inline std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rational(mpz_class(std::string(text)));
  }
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = text.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) return std::nullopt;
  mpz_class d{std::string(ds)};
  if (d == 0) return std::nullopt;
  return Rational(mpz_class{std::string(ns)}, d);
}

}  // namespace k3fib
