#include "k3fib/wpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {
const TPoly kZeroPoly{};
}

const char* var_name(Var v) {
  switch (v) {
    case Var::x1: return "x1";
    case Var::x2: return "x2";
    case Var::x3: return "x3";
    case Var::y: return "y";
    case Var::z: return "z";
  }
  return "?";
}

int Monomial::weighted_degree() const {
  int d = 0;
  for (int i = 0; i < kVarCount; ++i) d += kWeights[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
  return d;
}

bool Monomial::is_one() const {
  for (auto k : e)
    if (k != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < kVarCount; ++i)
    if (e[static_cast<std::size_t>(i)] > m.e[static_cast<std::size_t>(i)]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r;
  for (int i = 0; i < kVarCount; ++i)
    r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)] + m.e[static_cast<std::size_t>(i)]);
  return r;
}

Monomial Monomial::quotient_into(const Monomial& m) const {
  Monomial r;
  for (int i = 0; i < kVarCount; ++i)
    r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)]);
  return r;
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < kVarCount; ++i) {
    auto k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(static_cast<Var>(i));
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.weighted_degree(), db = b.weighted_degree();
  if (da != db) return da < db;
  // Same weighted degree: lex with x1 the most significant variable, so the
  // monomial with the larger exponent at the first difference is larger.
  return a.e < b.e;
}

WPoly WPoly::constant(TPoly c) { return term(Monomial::one(), std::move(c)); }

WPoly WPoly::term(const Monomial& m, TPoly c) {
  WPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

const TPoly& WPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? kZeroPoly : it->second;
}

void WPoly::add_term(const Monomial& m, const TPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WPoly WPoly::operator-() const {
  WPoly p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

WPoly& WPoly::operator+=(const WPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  WPoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

WPoly WPoly::scaled(const TPoly& c) const {
  WPoly p;
  if (c.is_zero()) return p;
  for (const auto& [m, tc] : terms_) p.add_term(m, tc * c);
  return p;
}

WPoly WPoly::pow(unsigned k) const {
  WPoly r = constant(Rational(1));
  WPoly base(*this);
  while (k != 0) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return r;
}

std::optional<int> WPoly::weighted_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = m.weighted_degree();
    if (!d || dm > *d) d = dm;
  }
  return d;
}

bool WPoly::is_weighted_homogeneous() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int dm = m.weighted_degree();
    if (d && dm != *d) return false;
    d = dm;
  }
  return true;
}

bool WPoly::is_weighted_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree() != d) return false;
  return true;
}

bool WPoly::uses(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(v) != 0) return true;
  return false;
}

int WPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp(v)));
  return d;
}

bool WPoly::t_free() const {
  for (const auto& [m, c] : terms_)
    if (c.degree() > 0) return false;
  return true;
}

WPoly WPoly::eval_t(const Rational& c) const {
  WPoly p;
  for (const auto& [m, tc] : terms_) p.add_term(m, TPoly(tc.eval(c)));
  return p;
}

WPoly WPoly::substitute(Var v, const WPoly& value) const {
  WPoly out;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    std::uint16_t k = m.e[idx];
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest = m;
    rest.e[idx] = 0;
    WPoly piece = value.pow(k) * WPoly::term(rest, c);
    out += piece;
  }
  return out;
}

Rational WPoly::eval_point(const std::array<Rational, kVarCount>& xs,
                           const Rational& t) const {
  Rational acc;
  for (const auto& [m, c] : terms_) {
    Rational v = c.eval(t);
    for (int i = 0; i < kVarCount; ++i) {
      auto k = m.e[static_cast<std::size_t>(i)];
      for (std::uint16_t j = 0; j < k; ++j) v *= xs[static_cast<std::size_t>(i)];
    }
    acc += v;
  }
  return acc;
}

WPoly WPoly::derivative(Var v) const {
  WPoly p;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    std::uint16_t k = m.e[idx];
    if (k == 0) continue;
    Monomial dm = m;
    dm.e[idx] = static_cast<std::uint16_t>(k - 1);
    p.add_term(dm, c.scaled(Rational(static_cast<long>(k))));
  }
  return p;
}

const Monomial& WPoly::grlex_leading() const {
  if (terms_.empty())
    throw std::domain_error("WPoly: grlex_leading of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || grlex_less(*best, m)) best = &m;
  return *best;
}

std::string WPoly::str() const {
  if (terms_.empty()) return "0";
  // Collect term pointers in grlex-descending order for printing.
  std::vector<const std::pair<const Monomial, TPoly>*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return grlex_less(b->first, a->first);
  });

  std::string out;
  for (auto* term : order) {
    const Monomial& m = term->first;
    const TPoly& c = term->second;
    if (c.degree() > 0) {
      // Coefficient genuinely involves t: keep it parenthesised so the term
      // boundary stays unambiguous, signs live inside the parens.
      if (!out.empty()) out += " + ";
      if (m.is_one()) {
        out += out.empty() && terms_.size() == 1 ? c.str() : "(" + c.str() + ")";
      } else {
        out += "(" + c.str() + ")*" + m.str();
      }
      continue;
    }
    const Rational& r = c.constant();
    bool neg = r.sign() < 0;
    Rational a = neg ? -r : r;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += m.str();
    }
  }
  return out;
}

}  // namespace k3fib
