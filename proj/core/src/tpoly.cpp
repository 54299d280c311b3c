#include "k3fib/tpoly.hpp"

#include <stdexcept>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {
const Rational kZero{};
}

TPoly::TPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

TPoly TPoly::t() { return monomial(1, Rational(1)); }

TPoly TPoly::monomial(int k, Rational c) {
  TPoly p;
  if (c.is_zero()) return p;
  if (k < 0) throw std::invalid_argument("TPoly::monomial: negative power");
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rational());
  p.c_.back() = std::move(c);
  return p;
}

TPoly TPoly::from_coefficients(std::vector<Rational> coeffs) {
  TPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& TPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

const Rational& TPoly::leading() const {
  if (is_zero()) throw std::domain_error("TPoly: leading() of zero");
  return c_.back();
}

TPoly TPoly::operator-() const {
  TPoly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  TPoly p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.trim();
  return p;
}

TPoly TPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return TPoly();
  TPoly p(*this);
  for (auto& x : p.c_) x *= c;
  return p;
}

TPoly TPoly::pow(unsigned k) const {
  TPoly r(Rational(1));
  TPoly base(*this);
  while (k != 0) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k != 0) base *= base;
  }
  return r;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::domain_error("TPoly: division by zero");
  TPoly q, r(a);
  int db = b.degree();
  if (r.degree() >= db)
    q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rational());
  const Rational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rational f = r.leading() / lb;
    q.c_[static_cast<std::size_t>(k)] = f;
    // r -= f * t^k * b, computed in place to skip the temporary.
    for (int i = 0; i <= db; ++i)
      r.c_[static_cast<std::size_t>(k + i)] -= f * b.coeff(i);
    r.trim();
  }
  q.trim();
  return {std::move(q), std::move(r)};
}

TPoly TPoly::divide_exact(const TPoly& a, const TPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw_internal("TPoly::divide_exact left a remainder");
  return q;
}

TPoly TPoly::gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    TPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

TPoly TPoly::monic() const {
  return scaled(leading().inverse());
}

Rational TPoly::eval(const Rational& c) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * c + c_[i];
  return acc;
}

TPoly TPoly::derivative() const {
  TPoly p;
  if (degree() < 1) return p;
  p.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    p.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
  p.trim();
  return p;
}

TPoly TPoly::shifted(const Rational& c) const {
  // Horner on p(t + c): acc := acc * (t + c) + coeff.
  TPoly shift = TPoly::t() + TPoly(c);
  TPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * shift + TPoly(c_[i]);
  return acc;
}

int TPoly::order_at(const Rational& c) const {
  if (is_zero()) throw std::domain_error("TPoly: order_at of zero polynomial");
  TPoly linear = TPoly::t() - TPoly(c);
  TPoly cur(*this);
  int ord = 0;
  for (;;) {
    auto [q, r] = divmod(cur, linear);
    if (!r.is_zero()) return ord;
    ++ord;
    cur = std::move(q);
  }
}

mpz_class TPoly::height() const {
  mpz_class h = 0;
  for (const auto& c : c_) {
    mpz_class hc = c.height();
    if (hc > h) h = hc;
  }
  return h;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace k3fib
