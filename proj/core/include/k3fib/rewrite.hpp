#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "k3fib/fibre.hpp"
#include "k3fib/wpoly.hpp"

namespace k3fib {

// Formal products of the degree-two generators of a fibre algebra.  The
// symbols S11..S33 are the images of the quadric monomials x1^2..x3^2 under
// the comparison map; SY is the extra weight-two generator of a unigonal
// fibre.  Unlike WPoly monomials, a SymMonomial remembers how a product was
// assembled from the generators (S12*S13 and S11*S23 are different words
// even though both expand to x1^2*x2*x3), which is what the straightening
// rules operate on.
enum SymId : std::uint8_t { S11 = 0, S12, S13, S22, S23, S33, SY };
inline constexpr int kSymCount = 7;

struct SymMonomial {
  std::array<std::uint16_t, kSymCount> e{};

  static SymMonomial one() { return {}; }
  static SymMonomial gen(SymId s, std::uint16_t k = 1) {
    SymMonomial m;
    m.e[s] = k;
    return m;
  }

  int factor_count() const;           // number of generator factors
  int weighted_degree() const { return 2 * factor_count(); }
  SymMonomial operator*(const SymMonomial& m) const;

  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;

  std::string str() const;  // e.g. "S11*S23^2*y"
};

struct SymLexLess {
  bool operator()(const SymMonomial& a, const SymMonomial& b) const {
    return a.e < b.e;
  }
};

// Rational combination of symbol words (fibre-level: constant coefficients).
class SymPoly {
public:
  using TermMap = std::map<SymMonomial, Rational, SymLexLess>;

  SymPoly() = default;
  static SymPoly term(const SymMonomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const SymMonomial& m) const;

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(const Rational& c) const;
  void add_term(const SymMonomial& m, const Rational& c);

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  std::string str() const;

private:
  TermMap terms_;
};

// Straightens a symbol product into the fibre's normal form by the exchange
// rules, each run to exhaustion, the whole pass repeated until stable:
//
//   (i)   S12*S12 -> S11*S22,  S12*S13 -> S11*S23,  S13*S13 -> S11*S33
//         (hyperelliptic; on a unigonal fibre the produced S11 is replaced
//         by a*S22 + b*S23, and any standalone S11 is eliminated the same
//         way first, since x1^2 = x2*(a*x2 + b*x3) there)
//   (ii)  S13*S22 -> S12*S23,  S13*S23 -> S12*S33
//   (iii) S23*S23 -> S22*S33
//
// A unigonal fibre must carry normalized parameters (a, b).
SymPoly normal_form(const SymPoly& p, const FibreType& fibre);

// Whether a single word is already straight for the given fibre type.
bool in_normal_form(const SymMonomial& m, const FibreType& fibre);

// Forgets the assembly: substitutes Sij -> xi*xj (and SY -> y, unigonal
// only) to land in the fibre's coordinate ring.
WPoly expand_symbols(const SymPoly& p, const FibreType& fibre);
WPoly expand_symbol(const SymMonomial& m, const FibreType& fibre);

}  // namespace k3fib
