#include "k3fib/cover.hpp"

#include <utility>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {

// Coefficient of y^k in f, as a polynomial with the y-power stripped.
WPoly y_coefficient(const WPoly& f, int k) {
  WPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.exp(Var::y) != k) continue;
    Monomial stripped = m;
    stripped.e[static_cast<std::size_t>(Var::y)] = 0;
    out = out + WPoly::term(stripped, c);
  }
  return out;
}

}  // namespace

WPoly RAlgebra::z_relation() const {
  return WPoly::term(Monomial::var(Var::z, 2), TPoly(1)) - g6;
}

RAlgebra build_r(const FiveTuple& tuple) {
  RAlgebra r;
  r.input = tuple;
  r.base = derive_presentation(tuple);

  if (tuple.beta.is_zero())
    throw Error(Errc::schema_violation, "beta must be nonzero");
  if (tuple.beta.uses(Var::z))
    throw Error(Errc::schema_violation, "beta must not involve z");
  if (!tuple.beta.is_weighted_homogeneous(6)) {
    throw Error(Errc::schema_violation,
                "beta must be weighted-homogeneous of degree 6");
  }

  auto [points, split] = rational_roots(r.base.d6);
  r.tau.points = std::move(points);
  r.tau.split = split;
  r.tau.degree = r.base.d6.degree();
  r.tau.d6 = r.base.d6;

  if (r.base.has_y) {
    // Eliminating y via d6 * y = q turns beta into
    // sum_k beta_k * q^k * d6^(3-k); beta lies in the relation ideal (the
    // cover degenerates to z^2 = 0) exactly when this vanishes.
    WPoly h;
    for (int k = 0; k <= 3; ++k) {
      const WPoly bk = y_coefficient(tuple.beta, k);
      if (bk.is_zero()) continue;
      h = h + bk * r.base.quadric.pow(static_cast<unsigned>(k))
                  .scaled(r.base.d6.pow(static_cast<unsigned>(3 - k)));
    }
    if (h.is_zero())
      throw Error(Errc::beta_degenerate,
                  "beta lies in the relation ideal: the branch sextic of "
                  "every fibre would vanish");
    // Store g6 reduced when the relation's leading coefficient permits a
    // division over the base ring; otherwise keep beta as given.
    const WPoly& f2 = r.base.relations.front();
    if (f2.coeff(f2.grlex_leading()).degree() == 0) {
      r.g6 = reduce_by_relation(tuple.beta, f2);
    } else {
      r.g6 = tuple.beta;
    }
  } else {
    // y = q globally; the substituted sextic is z^2 itself.
    const WPoly g6 = tuple.beta.substitute(Var::y, r.base.quadric);
    if (g6.is_zero())
      throw Error(Errc::beta_degenerate,
                  "beta lies in the relation ideal: the branch sextic of "
                  "every fibre would vanish");
    r.g6 = g6;
  }
  return r;
}

FibreAlgebra fibre_at(const RAlgebra& r, const Rational& c) {
  FibreAlgebra fa;
  fa.location = c;
  const Rational d6c = r.base.d6.eval(c);

  if (!d6c.is_zero()) {
    fa.type.tag = FibreType::Tag::hyperelliptic;
    const WPoly ysub = r.base.quadric.eval_t(c).scaled(d6c.inverse());
    fa.sextic = r.g6.eval_t(c).substitute(Var::y, ysub);
    fa.presentation.generators = {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"z", 3}};
    fa.presentation.relations = {
        WPoly::term(Monomial::var(Var::z, 2), TPoly(1)) - fa.sextic};
    fa.presentation.chart = "t = " + c.str();
    fa.presentation.has_y = false;
    fa.presentation.d6 = TPoly(1);
    return fa;
  }

  fa.type.tag = FibreType::Tag::unigonal;
  UnigonalParams params;
  params.r = 0;
  for (const TauPoint& p : r.tau.points) {
    if (p.location == c) {
      params.r = p.multiplicity;
      break;
    }
  }
  if (params.r == 0)
    throw_internal("rational root of d6 missing from the tau divisor");

  // d6(c) = 0, so the relation restricts to the bare quadric.
  const WPoly qc = r.base.quadric.eval_t(c);
  if (qc.is_zero()) {
    throw Error(Errc::degenerate_fibre,
                "relation vanishes identically at t = " + c.str());
  }
  const QuadricNormalization norm = normalize_unigonal_quadric(qc);
  params.normalized = norm.ok;
  WPoly quad = qc;
  WPoly sext = r.g6.eval_t(c);
  if (norm.ok) {
    params.a = norm.a;
    params.b = norm.b;
    quad = substitute_linear(qc, norm.transform);
    sext = substitute_linear(sext, norm.transform);
  }
  fa.type.unigonal = params;
  fa.quadric = quad;
  fa.sextic = sext;
  fa.cone_value =
      sext.eval_point({Rational(0), Rational(0), Rational(0), Rational(1),
                       Rational(0)},
                      c);
  fa.presentation.generators = {
      {"x1", 1}, {"x2", 1}, {"x3", 1}, {"y", 2}, {"z", 3}};
  fa.presentation.relations = {
      quad, WPoly::term(Monomial::var(Var::z, 2), TPoly(1)) - sext};
  fa.presentation.chart = "t = " + c.str();
  fa.presentation.has_y = true;
  fa.presentation.quadric = quad;
  fa.presentation.d6 = TPoly(0);
  return fa;
}

ParitySplit parity_split(const RAlgebra& r, int n,
                         const std::optional<Rational>& at) {
  ParitySplit split;
  split.degree = n;
  if (n < 0) return split;
  const GradedBasis a_part = graded_basis(r.base, n, at);
  for (const Monomial& m : a_part.monomials)
    (m.total_x_degree() % 2 == 0 ? split.plus : split.minus) += 1;
  if (n >= 3) {
    // z * (degree n-3 of A); z itself is even under the involution grading
    // used here (the table convention: sign is parity of the x-degree).
    const GradedBasis z_part = graded_basis(r.base, n - 3, at);
    for (const Monomial& m : z_part.monomials)
      (m.total_x_degree() % 2 == 0 ? split.plus : split.minus) += 1;
  }
  return split;
}

int fibre_dimension(const RAlgebra& r, int n,
                    const std::optional<Rational>& at) {
  const ParitySplit split = parity_split(r, n, at);
  return split.plus + split.minus;
}

}  // namespace k3fib
