#include "k3fib/admissibility.hpp"

#include <algorithm>
#include <utility>

#include "k3fib/errors.hpp"
#include "k3fib/milnor.hpp"

namespace k3fib {

namespace {

// ---- bivariate squarefreeness helpers ------------------------------------
//
// A dehomogenized sextic lives in Q[x2][x1]; coefficients are reused TPoly
// values (univariate dense polynomials, here in x2).  BiPoly[k] is the
// coefficient of x1^k.
using BiPoly = std::vector<TPoly>;

int bi_degree(const BiPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (!p[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TPoly bi_content(const BiPoly& p) {
  TPoly g;
  for (const TPoly& c : p) g = TPoly::gcd(g, c);
  return g;
}

BiPoly bi_primitive(const BiPoly& p) {
  const TPoly content = bi_content(p);
  if (content.is_zero() || content.degree() == 0) {
    BiPoly out = p;
    bi_trim(out);
    return out;
  }
  BiPoly out;
  out.reserve(p.size());
  for (const TPoly& c : p) out.push_back(TPoly::divide_exact(c, content));
  bi_trim(out);
  return out;
}

// Fraction-free remainder: eliminates the leading term of a against b by
// cross-multiplying with leading coefficients until deg a < deg b.
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  const int db = bi_degree(b);
  const TPoly& lb = b[static_cast<std::size_t>(db)];
  int da = bi_degree(a);
  while (da >= db && da >= 0) {
    const TPoly la = a[static_cast<std::size_t>(da)];
    const int shift = da - db;
    BiPoly next(static_cast<std::size_t>(da), TPoly());
    for (int k = 0; k < da; ++k) {
      TPoly v = a[static_cast<std::size_t>(k)] * lb;
      const int j = k - shift;
      if (j >= 0 && j <= db) v = v - b[static_cast<std::size_t>(j)] * la;
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    a = std::move(next);
    bi_trim(a);
    da = bi_degree(a);
  }
  return a;
}

// Degree in x1 of gcd(p, q) over Q(x2).
int bi_gcd_degree(BiPoly p, BiPoly q) {
  p = bi_primitive(p);
  q = bi_primitive(q);
  if (bi_degree(p) < bi_degree(q)) std::swap(p, q);
  while (true) {
    const int dq = bi_degree(q);
    if (dq < 0) return bi_degree(p);
    if (dq == 0) return 0;
    BiPoly r = bi_primitive(bi_prem(p, q));
    p = std::move(q);
    q = std::move(r);
  }
}

bool univariate_squarefree(const TPoly& p) {
  if (p.degree() <= 0) return true;
  return TPoly::gcd(p, p.derivative()).degree() == 0;
}

}  // namespace

bool sextic_is_reduced(const WPoly& f) {
  if (f.is_zero()) return false;
  if (!f.t_free() || f.uses(Var::y) || f.uses(Var::z))
    throw_internal("sextic_is_reduced expects a constant-coefficient form "
                   "in x1, x2, x3");

  // A variable dividing the form twice is a repeated linear factor; after
  // that, every repeated factor survives dehomogenization at x3 = 1.
  for (int v = 0; v < 3; ++v) {
    int min_exp = -1;
    for (const auto& [m, c] : f.terms()) {
      (void)c;
      const int e = m.e[static_cast<std::size_t>(v)];
      min_exp = (min_exp < 0) ? e : std::min(min_exp, e);
    }
    if (min_exp >= 2) return false;
  }

  BiPoly g;  // f(x1, x2, 1): coefficients in Q[x2] indexed by x1-power
  for (const auto& [m, c] : f.terms()) {
    const std::size_t a = m.e[0];
    if (g.size() <= a) g.resize(a + 1);
    g[a] = g[a] + TPoly::monomial(m.e[1], c.constant());
  }
  bi_trim(g);

  // Repeated factors split between the content (pure x2 part, checked as a
  // univariate) and the primitive part (checked by gcd with its
  // x1-derivative over Q(x2)).
  if (!univariate_squarefree(bi_content(g))) return false;
  const BiPoly pp = bi_primitive(g);
  const int d = bi_degree(pp);
  if (d <= 0) return true;
  BiPoly dp(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k)
    dp[static_cast<std::size_t>(k - 1)] =
        pp[static_cast<std::size_t>(k)].scaled(Rational(k));
  bi_trim(dp);
  return bi_gcd_degree(pp, dp) == 0;
}

namespace {

WPoly tpoly_in_x3(const TPoly& p) {
  WPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(k);
    if (!c.is_zero())
      out = out + WPoly::term(Monomial::var(Var::x3, static_cast<std::uint16_t>(k)),
                              TPoly(c));
  }
  return out;
}

// The germ of the hyperplane section through the distinguished point of the
// special fibre, in chart coordinates (B, C) and the shifted base parameter
// s:  G = B*d6(c+s) - beta(s)*B*C - gamma(s)*B^2 - alpha(s)*C^2, where
// alpha, beta, gamma are the coefficients of the sliced quadric
// q(x1, x2, l1*x1 + l2*x2; c+s) and the model needs alpha(0) != 0.
struct SliceGerm {
  bool available = false;
  WPoly germ;
};

SliceGerm slice_germ(const GradedPresentation& base, const Rational& c,
                     const QMatrix& rotation, const Rational& l1,
                     const Rational& l2) {
  SliceGerm out;
  const WPoly rotated = substitute_linear(base.quadric, rotation);
  const WPoly plane = WPoly::variable(Var::x1).scaled(l1) +
                      WPoly::variable(Var::x2).scaled(l2);
  const WPoly sliced = rotated.substitute(Var::x3, plane);

  const TPoly alpha = sliced.coeff(Monomial::var(Var::x1, 2));
  const TPoly beta =
      sliced.coeff(Monomial::var(Var::x1) * Monomial::var(Var::x2));
  const TPoly gamma = sliced.coeff(Monomial::var(Var::x2, 2));
  if (alpha.eval(c).is_zero()) return out;

  const WPoly b = WPoly::variable(Var::x1);
  const WPoly cc = WPoly::variable(Var::x2);
  out.available = true;
  out.germ = b * tpoly_in_x3(base.d6.shifted(c)) -
             b * cc * tpoly_in_x3(beta.shifted(c)) -
             b * b * tpoly_in_x3(gamma.shifted(c)) -
             cc * cc * tpoly_in_x3(alpha.shifted(c));
  return out;
}

QMatrix permutation(int p0, int p1, int p2) {
  QMatrix m(3, 3);
  m.at(0, static_cast<std::size_t>(p0)) = Rational(1);
  m.at(1, static_cast<std::size_t>(p1)) = Rational(1);
  m.at(2, static_cast<std::size_t>(p2)) = Rational(1);
  return m;
}

SingularityCheck singularity_at(const RAlgebra& r, const TauPoint& point,
                                const PipelineConfig& config) {
  SingularityCheck check;
  check.location = point.location;
  check.multiplicity = point.multiplicity;
  check.expected = point.multiplicity;

  static const std::pair<Rational, Rational> kPlanes[] = {
      {Rational(0), Rational(0)}, {Rational(1), Rational(0)},
      {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
      {Rational(1), Rational(-1)}, {Rational(-1), Rational(1)},
      {Rational(2), Rational(0)}, {Rational(0), Rational(2)},
  };
  const QMatrix rotations[] = {permutation(0, 1, 2), permutation(2, 1, 0),
                               permutation(0, 2, 1)};

  MilnorOptions opts;
  opts.truncation_cap = config.truncation_cap;
  int best = -1;
  for (const QMatrix& rot : rotations) {
    for (const auto& [l1, l2] : kPlanes) {
      const SliceGerm slice =
          slice_germ(r.base, point.location, rot, l1, l2);
      if (!slice.available) continue;
      check.model_available = true;
      const MilnorResult mu =
          milnor_number(slice.germ, {Var::x1, Var::x2, Var::x3}, opts);
      if (!mu.isolated) continue;
      if (best < 0 || mu.milnor < best) best = mu.milnor;
    }
  }
  // A generic slice realizes the smallest sectional colength; the minimum
  // over the candidate list stands in for it.
  if (best >= 0) {
    check.isolated = true;
    check.milnor = best;
  }
  check.agrees = check.isolated && check.milnor == check.expected;
  return check;
}

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::string condition_ii_status_name(CheckStatus s) {
  return s == CheckStatus::pass ? "pass_partial" : check_status_name(s);
}

AdmissibilityReport check_admissibility(const RAlgebra& r,
                                        const PipelineConfig& config) {
  AdmissibilityReport report;

  const BranchData branch = branch_data(r);
  report.cone_points = branch.points;
  report.condition_i = CheckStatus::pass;
  for (const BranchPoint& bp : branch.points) {
    if (!bp.cone_ok) {
      report.condition_i = CheckStatus::fail;
      report.notes.push_back("branch sextic vanishes at the cone point of "
                             "the fibre over t = " +
                             bp.location.str());
    }
  }

  bool sextic_failed = false;
  for (const Rational& c : config.samples) {
    if (r.base.d6.eval(c).is_zero()) {
      report.notes.push_back("sample t = " + c.str() +
                             " lies on the special locus; skipped");
      continue;
    }
    const FibreAlgebra fibre = fibre_at(r, c);
    SexticCheck check;
    check.location = c;
    check.nonzero = !fibre.sextic.is_zero();
    check.reduced = check.nonzero && sextic_is_reduced(fibre.sextic);
    if (!check.reduced) {
      sextic_failed = true;
      report.notes.push_back("branch sextic of the fibre over t = " +
                             c.str() +
                             (check.nonzero ? " is not reduced" : " vanishes"));
    }
    report.sextics.push_back(check);
  }

  bool singularities_agree = true;
  bool all_normalized = true;
  for (const TauPoint& p : r.tau.points) {
    const FibreAlgebra fibre = fibre_at(r, p.location);
    if (fibre.type.unigonal && !fibre.type.unigonal->normalized) {
      all_normalized = false;
      report.notes.push_back(
          "fibre over t = " + p.location.str() +
          " normalizes only over a field extension; its invariants (a, b) "
          "are not reported");
    }
    SingularityCheck check = singularity_at(r, p, config);
    if (!check.agrees) {
      singularities_agree = false;
      if (!check.model_available) {
        report.notes.push_back("no transversal slice found at t = " +
                               p.location.str());
      } else if (!check.isolated) {
        report.notes.push_back("section germ at t = " + p.location.str() +
                               " did not stabilize below the truncation cap");
      } else {
        report.notes.push_back(
            "section germ at t = " + p.location.str() + " has colength " +
            std::to_string(check.milnor) + ", expected " +
            std::to_string(check.expected));
      }
    }
    report.singularities.push_back(std::move(check));
  }

  if (!r.tau.split) {
    report.notes.push_back(
        "special locus has irrational points; only the rational part was "
        "checked");
  }

  if (sextic_failed) {
    report.condition_ii = CheckStatus::fail;
  } else if (report.sextics.empty() && report.singularities.empty()) {
    report.condition_ii = CheckStatus::undetermined;
    report.notes.push_back("no fibre checks ran: no usable samples");
  } else if (singularities_agree && all_normalized && r.tau.split) {
    report.condition_ii = CheckStatus::pass;
  } else {
    report.condition_ii = CheckStatus::undetermined;
  }

  if (report.condition_i == CheckStatus::fail ||
      report.condition_ii == CheckStatus::fail) {
    report.verdict = "not_admissible";
  } else if (report.condition_i == CheckStatus::pass &&
             report.condition_ii == CheckStatus::pass) {
    report.verdict = "admissible";
  } else {
    report.verdict = "undetermined";
  }
  return report;
}

AdmissibilityReport check_admissibility(const FiveTuple& tuple,
                                        const PipelineConfig& config) {
  return check_admissibility(build_r(tuple), config);
}

}  // namespace k3fib
