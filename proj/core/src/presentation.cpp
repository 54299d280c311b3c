#include "k3fib/presentation.hpp"

#include "k3fib/errors.hpp"
#include "k3fib/smith.hpp"

namespace k3fib {

namespace {

Monomial xmono(int e1, int e2, int e3) {
  Monomial m;
  m.e[0] = static_cast<std::uint16_t>(e1);
  m.e[1] = static_cast<std::uint16_t>(e2);
  m.e[2] = static_cast<std::uint16_t>(e3);
  return m;
}

}  // namespace

const Monomial kQuadricMonomials[6] = {
    xmono(2, 0, 0), xmono(1, 1, 0), xmono(1, 0, 1),
    xmono(0, 2, 0), xmono(0, 1, 1), xmono(0, 0, 2),
};

GradedPresentation derive_presentation(const FiveTuple& tuple) {
  const SmithDecomposition snf = smith_normal_form(tuple.sigma2);
  const std::vector<TPoly> factors = snf.invariant_factors();
  if (factors.size() < 6) {
    throw Error(Errc::sigma_not_injective,
                "sigma2 is not injective: rank " +
                    std::to_string(factors.size()) + " < 6");
  }
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].degree() != 0) {
      throw Error(Errc::non_cyclic_cokernel,
                  "cokernel of sigma2 is not cyclic: invariant factor d" +
                      std::to_string(i + 1) + " = " + factors[i].str() +
                      " is not a unit");
    }
  }

  GradedPresentation pres;
  pres.d6 = factors[5];
  pres.has_y = pres.d6.degree() > 0;

  // q is read off the last column of the right transform: the Smith basis
  // vector whose sigma2-image is d6 times the distinguished target vector.
  WPoly q;
  for (std::size_t k = 0; k < 6; ++k) {
    const TPoly& c = snf.v.at(k, 5);
    if (!c.is_zero()) q = q + WPoly::term(kQuadricMonomials[k], c);
  }

  pres.generators = {{"x1", 1}, {"x2", 1}, {"x3", 1}};
  if (pres.has_y) {
    if (!q.is_zero()) {
      const Rational lead = q.coeff(q.grlex_leading()).leading();
      q = q.scaled(lead.inverse());
    }
    pres.quadric = q;
    pres.generators.emplace_back("y", 2);
    WPoly f2 = q - WPoly::term(Monomial::var(Var::y), pres.d6);
    pres.relations.push_back(std::move(f2));
  } else {
    // d6 is a monic unit, hence exactly 1: y = q globally and the algebra
    // is free on x1, x2, x3.
    pres.quadric = q;
  }
  return pres;
}

}  // namespace k3fib
