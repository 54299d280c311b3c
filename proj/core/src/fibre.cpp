#include "k3fib/fibre.hpp"

#include <array>
#include <cstdint>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {

using Vec3 = std::array<Rational, 3>;

Rational dot(const QMatrix& g, const Vec3& u, const Vec3& v) {
  Rational s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += u[i] * g.at(i, j) * v[j];
  return s;
}

Vec3 axpy(const Rational& c, const Vec3& x, const Vec3& y) {
  return {c * x[0] + y[0], c * x[1] + y[1], c * x[2] + y[2]};
}

bool independent(const Vec3& u, const Vec3& v) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (u[i] * v[j] != u[j] * v[i]) return true;
  return false;
}

}  // namespace

QuadricNormalization normalize_unigonal_quadric(const WPoly& quadric) {
  if (quadric.is_zero())
    throw Error(Errc::degenerate_fibre, "fibre quadric vanishes identically");
  if (!quadric.t_free() || quadric.uses(Var::y) || quadric.uses(Var::z) ||
      !quadric.is_weighted_homogeneous(2)) {
    throw_internal("normalize_unigonal_quadric expects a constant-coefficient "
                   "quadric in x1, x2, x3");
  }

  // Symmetric Gram matrix: quadric(u) = u^T g u.
  QMatrix g(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      Monomial m;
      m.e[i] += 1;
      m.e[j] += 1;
      const Rational c = quadric.coeff(m).constant();
      if (i == j) {
        g.at(i, i) = c;
      } else {
        g.at(i, j) = c / Rational(2);
        g.at(j, i) = g.at(i, j);
      }
    }
  }
  if (g.rank() <= 1) {
    throw Error(Errc::degenerate_fibre,
                "fibre quadric has rank <= 1; no unigonal normal form exists");
  }

  QuadricNormalization result;
  result.transform = QMatrix::identity(3);

  // Deterministic search for a rational point with square value.
  static const Vec3 kProbes[] = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},  {1, 1, 0},  {1, 0, 1},
      {0, 1, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1},
  };
  Vec3 f1{};
  bool found = false;
  for (const Vec3& v : kProbes) {
    const Rational val = dot(g, v, v);
    if (!val.is_zero() && val.is_square()) {
      const Rational w = val.sqrt().inverse();
      f1 = {v[0] * w, v[1] * w, v[2] * w};
      found = true;
      break;
    }
  }
  if (!found) return result;  // ok = false: needs a field extension

  // Orthogonal complement of f1 (with respect to the polar form) is spanned
  // by the projections of the standard vectors; take the first two that are
  // independent.
  std::array<Vec3, 2> comp;
  std::size_t have = 0;
  for (std::size_t j = 0; j < 3 && have < 2; ++j) {
    Vec3 e{};
    e[j] = Rational(1);
    const Vec3 u = axpy(-dot(g, f1, e), f1, e);
    if (u[0].is_zero() && u[1].is_zero() && u[2].is_zero()) continue;
    if (have == 1 && !independent(comp[0], u)) continue;
    comp[have++] = u;
  }
  if (have != 2) throw_internal("orthogonal complement of f1 is degenerate");

  Vec3 f2 = comp[0];
  Vec3 f3 = comp[1];
  Rational delta = dot(g, f2, f2);
  Rational eps = dot(g, f2, f3) * Rational(2);
  Rational zeta = dot(g, f3, f3);

  if (!zeta.is_zero() && delta.is_zero() && eps.is_zero()) {
    std::swap(f2, f3);
    std::swap(delta, zeta);
  }
  if (!zeta.is_zero()) {
    // Shear f3 across f2 to kill the x3^2 coefficient: needs a rational
    // root of delta*s^2 + eps*s + zeta.
    Rational theta;
    if (delta.is_zero()) {
      theta = -zeta / eps;
    } else {
      const Rational disc = eps * eps - Rational(4) * delta * zeta;
      if (!disc.is_square()) return result;  // ok = false
      theta = (disc.sqrt() - eps) / (Rational(2) * delta);
    }
    f3 = axpy(theta, f2, f3);
    eps = eps + Rational(2) * theta * delta;
    zeta = Rational(0);
  }

  result.ok = true;
  result.a = -delta;
  result.b = -eps;
  for (std::size_t i = 0; i < 3; ++i) {
    result.transform.at(i, 0) = f1[i];
    result.transform.at(i, 1) = f2[i];
    result.transform.at(i, 2) = f3[i];
  }

  // The construction guarantees the normal form; verify exactly.
  WPoly expect = WPoly::variable(Var::x1) * WPoly::variable(Var::x1) -
                 (WPoly::variable(Var::x2) * WPoly::variable(Var::x2))
                     .scaled(result.a) -
                 (WPoly::variable(Var::x2) * WPoly::variable(Var::x3))
                     .scaled(result.b);
  if (!(substitute_linear(quadric, result.transform) == expect))
    throw_internal("unigonal quadric normalization failed verification");
  if (result.a.is_zero() && result.b.is_zero())
    throw_internal("unigonal normalization produced (a, b) = (0, 0)");
  return result;
}

WPoly substitute_linear(const WPoly& f, const QMatrix& transform) {
  std::array<WPoly, 3> images;
  for (std::size_t i = 0; i < 3; ++i) {
    WPoly li;
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational& c = transform.at(i, j);
      if (!c.is_zero())
        li = li + WPoly::variable(static_cast<Var>(j)).scaled(c);
    }
    images[i] = li;
  }
  WPoly out;
  for (const auto& [mono, coeff] : f.terms()) {
    WPoly term = WPoly::constant(coeff);
    for (std::size_t i = 0; i < 3; ++i)
      if (mono.e[i] > 0) term = term * images[i].pow(mono.e[i]);
    Monomial rest;
    rest.e[3] = mono.e[3];
    rest.e[4] = mono.e[4];
    out = out + term * WPoly::term(rest, TPoly(1));
  }
  return out;
}

}  // namespace k3fib
