#include "k3fib/torsion.hpp"

#include <algorithm>
#include <map>

#include "k3fib/errors.hpp"
#include "k3fib/smith.hpp"

namespace k3fib {

namespace {

// Structural multiset of localization orders at a point of multiplicity r:
// degree 2m   -> { i*r with multiplicity 4(m-i)+1, i = 1..m }
// degree 2m+1 -> { i*r with multiplicity 4(m-i)+3, i = 1..m }
std::vector<int> expected_orders(int n, int r) {
  std::vector<int> out;
  const int m = n / 2;
  const int offset = (n % 2 == 0) ? 1 : 3;
  for (int i = 1; i <= m; ++i) {
    const int count = 4 * (m - i) + offset;
    for (int k = 0; k < count; ++k) out.push_back(i * r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Total degree of the structural multiset per unit of multiplicity.
int expected_weight(int n) {
  int w = 0;
  for (const int o : expected_orders(n, 1)) w += o;
  return w;
}

}  // namespace

TorsionReport torsion_decomposition(const RAlgebra& r, int n) {
  if (n < 2 || n > 7) {
    throw Error(Errc::schema_violation,
                "torsion degree " + std::to_string(n) +
                    " out of the supported range 2..7");
  }

  TorsionReport report;
  report.degree_n = n;
  report.expected_total_degree = expected_weight(n) * r.tau.degree;

  if (!r.base.has_y) {
    // Free module: no torsion anywhere, and tau is empty.
    report.match = report.expected_total_degree == 0;
    return report;
  }

  const WPoly& f2 = r.base.relations.front();
  const std::vector<Monomial> all = weighted_monomials(n, true);
  std::vector<Monomial> rows;
  for (const Monomial& m : all)
    if (m.exp(Var::y) > 0) rows.push_back(m);
  const std::vector<Monomial> cols = weighted_monomials(n - 2, true);
  if (rows.size() != cols.size())
    throw_internal("torsion presentation is not square");

  std::map<Monomial, std::size_t, MonomialLexLess> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  PolyMatrix mat(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const WPoly image = f2 * WPoly::term(cols[c], TPoly(1));
    for (const auto& [mono, coeff] : image.terms()) {
      const auto it = row_index.find(mono);
      if (it != row_index.end()) mat.at(it->second, c) = coeff;
    }
  }

  const std::vector<TPoly> factors = smith_invariant_factors(mat);
  for (const TPoly& d : factors) {
    if (d.is_zero())
      throw_internal("torsion presentation is singular in degree " +
                     std::to_string(n));
    if (d.degree() > 0) report.factors.push_back(d);
  }
  for (const TPoly& d : report.factors) report.total_degree += d.degree();

  bool all_points_match = true;
  for (const TauPoint& p : r.tau.points) {
    PointTorsion pt;
    pt.location = p.location;
    pt.multiplicity = p.multiplicity;
    for (const TPoly& d : report.factors) {
      const int ord = d.order_at(p.location);
      if (ord > 0) pt.orders.push_back(ord);
    }
    std::sort(pt.orders.begin(), pt.orders.end());
    pt.expected = expected_orders(n, p.multiplicity);
    pt.match = pt.orders == pt.expected;
    all_points_match = all_points_match && pt.match;
    report.per_point.push_back(std::move(pt));
  }

  report.match = all_points_match &&
                 report.total_degree == report.expected_total_degree;
  return report;
}

std::string torsion_factor_string(const Rational& location, int order) {
  const TPoly base = TPoly::t() - TPoly(location);
  std::string s = base.str();
  if (order > 1) {
    if (s.find(' ') != std::string::npos) s = "(" + s + ")";
    s += "^" + std::to_string(order);
  }
  return s;
}

std::vector<std::string> torsion_factor_strings(const PointTorsion& pt) {
  std::vector<std::string> out;
  out.reserve(pt.orders.size());
  for (const int o : pt.orders)
    out.push_back(torsion_factor_string(pt.location, o));
  return out;
}

}  // namespace k3fib
