#include "k3fib/rewrite.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"

namespace k3fib {

int SymMonomial::factor_count() const {
  int n = 0;
  for (int i = 0; i < kSymCount; ++i) n += e[static_cast<std::size_t>(i)];
  return n;
}

SymMonomial SymMonomial::operator*(const SymMonomial& m) const {
  SymMonomial r;
  for (int i = 0; i < kSymCount; ++i) {
    const auto s = static_cast<std::size_t>(i);
    r.e[s] = static_cast<std::uint16_t>(e[s] + m.e[s]);
  }
  return r;
}

std::string SymMonomial::str() const {
  static const char* kNames[kSymCount] = {"S11", "S12", "S13", "S22",
                                          "S23", "S33", "y"};
  std::string out;
  for (int i = 0; i < kSymCount; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (e[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[s];
    if (e[s] > 1) out += "^" + std::to_string(e[s]);
  }
  return out.empty() ? "1" : out;
}

SymPoly SymPoly::term(const SymMonomial& m, const Rational& c) {
  SymPoly p;
  p.add_term(m, c);
  return p;
}

Rational SymPoly::coeff(const SymMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const SymMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SymPoly SymPoly::scaled(const Rational& c) const {
  SymPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*" + m.str();
  }
  return out;
}

namespace {

struct Rules {
  bool unigonal = false;
  Rational a;
  Rational b;

  // a*S22 + b*S23, the unigonal replacement for S11.
  SymPoly s11_image() const {
    SymPoly p;
    p.add_term(SymMonomial::gen(S22), a);
    p.add_term(SymMonomial::gen(S23), b);
    return p;
  }
};

SymMonomial shift(SymMonomial m, SymId down1, SymId down2, SymId up1,
                  SymId up2) {
  m.e[down1] -= 1;
  m.e[down2] -= 1;
  m.e[up1] += 1;
  m.e[up2] += 1;
  return m;
}

// One application of rule (i) / (i') on a word, if it triggers.
std::optional<SymPoly> apply_i(const SymMonomial& m, const Rules& rules) {
  if (rules.unigonal && m.e[S11] >= 1) {
    SymMonomial rest = m;
    rest.e[S11] -= 1;
    return rules.s11_image() * SymPoly::term(rest, Rational(1));
  }
  SymId pair1, pair2, target;
  if (m.e[S12] >= 2) {
    pair1 = pair2 = S12;
    target = S22;
  } else if (m.e[S12] >= 1 && m.e[S13] >= 1) {
    pair1 = S12;
    pair2 = S13;
    target = S23;
  } else if (m.e[S13] >= 2) {
    pair1 = pair2 = S13;
    target = S33;
  } else {
    return std::nullopt;
  }
  SymMonomial rest = m;
  rest.e[pair1] -= 1;
  rest.e[pair2] -= 1;
  rest.e[target] += 1;
  if (!rules.unigonal) {
    rest.e[S11] += 1;
    return SymPoly::term(rest, Rational(1));
  }
  return rules.s11_image() * SymPoly::term(rest, Rational(1));
}

std::optional<SymPoly> apply_ii(const SymMonomial& m, const Rules&) {
  if (m.e[S13] >= 1 && m.e[S22] >= 1)
    return SymPoly::term(shift(m, S13, S22, S12, S23), Rational(1));
  if (m.e[S13] >= 1 && m.e[S23] >= 1)
    return SymPoly::term(shift(m, S13, S23, S12, S33), Rational(1));
  return std::nullopt;
}

std::optional<SymPoly> apply_iii(const SymMonomial& m, const Rules&) {
  if (m.e[S23] >= 2)
    return SymPoly::term(shift(m, S23, S23, S22, S33), Rational(1));
  return std::nullopt;
}

using Rule = std::optional<SymPoly> (*)(const SymMonomial&, const Rules&);

// Runs one rule to exhaustion over the whole polynomial.
SymPoly exhaust(const SymPoly& p, Rule rule, const Rules& rules) {
  SymPoly done;
  std::vector<std::pair<SymMonomial, Rational>> work(p.terms().begin(),
                                                     p.terms().end());
  // Every rule strictly decreases a nonnegative measure of the word it
  // fires on, so the worklist drains; the cap is a defensive guard.
  std::size_t steps = 0;
  const std::size_t kCap = 2'000'000;
  while (!work.empty()) {
    if (++steps > kCap) throw_internal("straightening rule did not terminate");
    auto [m, c] = work.back();
    work.pop_back();
    if (auto image = rule(m, rules)) {
      for (const auto& [m2, c2] : image->terms()) work.emplace_back(m2, c2 * c);
    } else {
      done.add_term(m, c);
    }
  }
  return done;
}

Rules rules_for(const FibreType& fibre) {
  Rules rules;
  if (fibre.is_unigonal()) {
    if (!fibre.unigonal || !fibre.unigonal->normalized) {
      throw_internal(
          "normal_form needs normalized unigonal parameters (a, b)");
    }
    rules.unigonal = true;
    rules.a = fibre.unigonal->a;
    rules.b = fibre.unigonal->b;
  }
  return rules;
}

}  // namespace

bool in_normal_form(const SymMonomial& m, const FibreType& fibre) {
  if (m.e[S12] + m.e[S13] > 1) return false;
  if (m.e[S23] > 1) return false;
  if (m.e[S13] == 1 && (m.e[S22] > 0 || m.e[S23] > 0)) return false;
  if (fibre.is_unigonal()) return m.e[S11] == 0;
  return m.e[SY] == 0;
}

SymPoly normal_form(const SymPoly& p, const FibreType& fibre) {
  const Rules rules = rules_for(fibre);
  if (!fibre.is_unigonal()) {
    for (const auto& [m, c] : p.terms()) {
      (void)c;
      if (m.e[SY] > 0)
        throw_internal("hyperelliptic fibre has no weight-two generator y");
    }
  }

  SymPoly cur = p;
  const int kPassCap = 10'000;
  for (int pass = 0; pass < kPassCap; ++pass) {
    SymPoly next = exhaust(cur, apply_i, rules);
    next = exhaust(next, apply_ii, rules);
    next = exhaust(next, apply_iii, rules);
    if (next == cur) {
      for (const auto& [m, c] : next.terms()) {
        (void)c;
        if (!in_normal_form(m, fibre))
          throw_internal("straightening stabilized off normal form at " +
                         m.str());
      }
      return next;
    }
    cur = std::move(next);
  }
  throw_internal("straightening passes did not stabilize");
}

WPoly expand_symbol(const SymMonomial& m, const FibreType& fibre) {
  static const Monomial kImages[6] = {
      Monomial::var(Var::x1, 2),
      Monomial::var(Var::x1) * Monomial::var(Var::x2),
      Monomial::var(Var::x1) * Monomial::var(Var::x3),
      Monomial::var(Var::x2, 2),
      Monomial::var(Var::x2) * Monomial::var(Var::x3),
      Monomial::var(Var::x3, 2),
  };
  if (m.e[SY] > 0 && !fibre.is_unigonal())
    throw_internal("hyperelliptic fibre has no weight-two generator y");
  Monomial out = Monomial::var(Var::y, m.e[SY]);
  for (int s = S11; s <= S33; ++s) {
    for (int k = 0; k < m.e[static_cast<std::size_t>(s)]; ++k)
      out = out * kImages[s];
  }
  return WPoly::term(out, TPoly(1));
}

WPoly expand_symbols(const SymPoly& p, const FibreType& fibre) {
  WPoly out;
  for (const auto& [m, c] : p.terms())
    out = out + expand_symbol(m, fibre).scaled(c);
  return out;
}

}  // namespace k3fib
