#include "k3fib/graded.hpp"

#include <algorithm>
#include <map>

#include "k3fib/errors.hpp"

namespace k3fib {

std::vector<Monomial> weighted_monomials(int n, bool with_y) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  const int ymax = with_y ? n / 2 : 0;
  for (int ey = 0; ey <= ymax; ++ey) {
    const int d = n - 2 * ey;
    for (int e1 = d; e1 >= 0; --e1) {
      for (int e2 = d - e1; e2 >= 0; --e2) {
        Monomial m;
        m.e[0] = static_cast<std::uint16_t>(e1);
        m.e[1] = static_cast<std::uint16_t>(e2);
        m.e[2] = static_cast<std::uint16_t>(d - e1 - e2);
        m.e[3] = static_cast<std::uint16_t>(ey);
        out.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return out;
}

GradedBasis graded_basis(const GradedPresentation& pres, int n,
                         const std::optional<Rational>& at) {
  GradedBasis basis;
  basis.degree = n;
  std::vector<Monomial> all = weighted_monomials(n, pres.has_y);
  if (pres.relations.empty()) {
    basis.monomials = std::move(all);
    return basis;
  }

  WPoly rel = pres.relations.front();
  if (at) {
    rel = rel.eval_t(*at);
    if (rel.is_zero()) {
      throw Error(Errc::degenerate_fibre,
                  "relation vanishes identically at t = " + at->str());
    }
  }
  const Monomial lead = rel.grlex_leading();
  for (const Monomial& m : all)
    if (!lead.divides(m)) basis.monomials.push_back(m);
  return basis;
}

std::vector<int> hilbert_function(const GradedPresentation& pres,
                                  int max_degree) {
  std::vector<int> dims;
  dims.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n)
    dims.push_back(static_cast<int>(graded_basis(pres, n).size()));
  return dims;
}

WPoly reduce_by_relation(WPoly f, const WPoly& rel) {
  if (rel.is_zero()) return f;
  const Monomial lead = rel.grlex_leading();
  const TPoly& lc = rel.coeff(lead);
  if (lc.degree() != 0) {
    throw Error(Errc::unit_leading_required,
                "cannot reduce: relation's leading coefficient " + lc.str() +
                    " is not a unit");
  }
  const Rational inv_lc = lc.leading().inverse();

  // Graded-lex division: repeatedly cancel the largest divisible term.  The
  // replaced monomial strictly dominates everything it introduces, so the
  // loop terminates.
  WPoly out;
  while (!f.is_zero()) {
    const Monomial m = f.grlex_leading();
    const TPoly c = f.coeff(m);
    if (lead.divides(m)) {
      const Monomial q = lead.quotient_into(m);
      f = f - rel.scaled(c.scaled(inv_lc)) * WPoly::term(q, TPoly(1));
    } else {
      out = out + WPoly::term(m, c);
      f = f - WPoly::term(m, c);
    }
  }
  return out;
}

namespace {

std::map<Monomial, std::size_t, MonomialLexLess> index_of(
    const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, MonomialLexLess> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

}  // namespace

std::vector<TPoly> coordinates(const WPoly& f,
                               const std::vector<Monomial>& basis) {
  const auto idx = index_of(basis);
  std::vector<TPoly> coords(basis.size());
  for (const auto& [m, c] : f.terms()) {
    const auto it = idx.find(m);
    if (it == idx.end())
      throw_internal("coordinates: monomial " + m.str() + " outside basis");
    coords[it->second] = c;
  }
  return coords;
}

std::vector<Rational> rational_coordinates(const WPoly& f,
                                           const std::vector<Monomial>& basis) {
  std::vector<Rational> coords(basis.size());
  const std::vector<TPoly> full = coordinates(f, basis);
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (full[i].degree() > 0)
      throw_internal("rational_coordinates: coefficient depends on t");
    coords[i] = full[i].constant();
  }
  return coords;
}

}  // namespace k3fib
