#include "k3fib/five_tuple.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "k3fib/errors.hpp"
#include "k3fib/poly_io.hpp"
#include "k3fib/smith.hpp"

namespace k3fib {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& field, const std::string& what) {
  throw Error(Errc::schema_violation, "input field '" + field + "': " + what);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string poly_field(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "sigma2[" << i << "][" << j << "]";
  return os.str();
}

// Divisors of |n| in ascending order; n != 0.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> low, high;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      mpz_class q = n / d;
      if (q != d) high.push_back(q);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

std::pair<std::vector<TauPoint>, bool> rational_roots(const TPoly& p) {
  if (p.is_zero())
    throw std::domain_error("rational_roots: zero polynomial");
  std::vector<TauPoint> roots;
  TPoly cur = p;

  // Peel off t = 0 first, then scale to integer coefficients and run the
  // usual p/q candidate test against the constant and leading terms.
  int at_zero = 0;
  while (!cur.is_zero() && cur.constant().is_zero() && cur.degree() > 0) {
    cur = TPoly::divide_exact(cur, TPoly::t());
    ++at_zero;
  }
  if (at_zero > 0) roots.push_back({Rational(0), at_zero});

  if (cur.degree() > 0) {
    mpz_class denom_lcm = 1;
    for (int k = 0; k <= cur.degree(); ++k)
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
              cur.coeff(k).den().get_mpz_t());
    TPoly zp = cur.scaled(Rational(denom_lcm));

    std::set<Rational> candidates;
    for (const mpz_class& pd : divisors(zp.constant().num()))
      for (const mpz_class& qd : divisors(zp.leading().num())) {
        candidates.insert(Rational(pd, qd));
        candidates.insert(-Rational(pd, qd));
      }
    for (const Rational& c : candidates) {
      if (cur.degree() == 0) break;
      if (!cur.eval(c).is_zero()) continue;
      TPoly linear = TPoly::t() - TPoly(c);
      int mult = 0;
      for (;;) {
        auto [q, r] = TPoly::divmod(cur, linear);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++mult;
      }
      roots.push_back({c, mult});
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const TauPoint& a, const TauPoint& b) {
              return a.location < b.location;
            });
  return {std::move(roots), cur.degree() <= 0};
}

TauDivisor compute_tau(const PolyMatrix& sigma2) {
  std::vector<TPoly> factors = smith_invariant_factors(sigma2);
  std::size_t n = std::min(sigma2.rows(), sigma2.cols());
  if (factors.size() < n)
    throw Error(Errc::sigma_not_injective,
                "sigma2 is not injective: det sigma2 == 0");
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].degree() > 0)
      throw Error(Errc::non_cyclic_cokernel,
                  "cokernel of sigma2 is not cyclic: invariant factor d" +
                      std::to_string(i + 1) + " = " + factors[i].str());
  }

  TauDivisor tau;
  tau.d6 = factors.back();
  tau.degree = tau.d6.degree();
  auto [points, split] = rational_roots(tau.d6);
  tau.points = std::move(points);
  tau.split = split;
  return tau;
}

FiveTuple parse_five_tuple(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_col(json_text, byte);
    throw ParseError("input JSON is malformed at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + e.what(),
                     byte);
  }
  if (!doc.is_object()) schema_fail("$", "top level must be an object");

  static const std::set<std::string> known = {"beta", "e3_twist", "name",
                                              "sigma2"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) schema_fail(key, "unknown field");

  FiveTuple ft;

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_fail("name", "must be a string");
    ft.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("sigma2")) schema_fail("sigma2", "missing");
  const json& mat = doc["sigma2"];
  if (!mat.is_array() || mat.size() != 6)
    schema_fail("sigma2", "must be an array of 6 rows");
  ft.sigma2 = PolyMatrix(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const json& row = mat[i];
    if (!row.is_array() || row.size() != 6)
      schema_fail("sigma2[" + std::to_string(i) + "]",
                  "must be an array of 6 entries");
    for (std::size_t j = 0; j < 6; ++j) {
      const json& cell = row[j];
      if (!cell.is_string()) schema_fail(poly_field(i, j), "must be a string");
      ft.sigma2.at(i, j) =
          parse_tpoly(cell.get<std::string>(), poly_field(i, j));
    }
  }

  if (!doc.contains("e3_twist")) schema_fail("e3_twist", "missing");
  if (!doc["e3_twist"].is_number_integer())
    schema_fail("e3_twist", "must be an integer");
  ft.e3_twist = doc["e3_twist"].get<long>();

  if (!doc.contains("beta")) schema_fail("beta", "missing");
  if (!doc["beta"].is_string()) schema_fail("beta", "must be a string");
  PolyGrammar g;
  g.allow_x = true;
  g.allow_y = true;
  g.allow_z = false;  // the degree-six datum lives below the weight-3 summand
  g.field = "beta";
  ft.beta = parse_poly(doc["beta"].get<std::string>(), g);

  return ft;
}

FiveTuple load_five_tuple(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::schema_violation, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_five_tuple(buf.str());
}

std::string serialize_five_tuple(const FiveTuple& ft) {
  json doc;
  doc["beta"] = ft.beta.str();
  doc["e3_twist"] = ft.e3_twist;
  if (!ft.name.empty()) doc["name"] = ft.name;
  json mat = json::array();
  for (std::size_t i = 0; i < ft.sigma2.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < ft.sigma2.cols(); ++j)
      row.push_back(ft.sigma2.at(i, j).str());
    mat.push_back(row);
  }
  doc["sigma2"] = mat;
  return doc.dump(2) + "\n";
}

ValidationReport validate(const FiveTuple& ft) {
  ValidationReport report;
  auto issue = [&report](std::string field, std::string message) {
    report.ok = false;
    report.issues.push_back({std::move(field), std::move(message)});
  };

  std::vector<TPoly> factors = smith_invariant_factors(ft.sigma2);
  std::size_t n = std::min(ft.sigma2.rows(), ft.sigma2.cols());
  if (factors.size() < n) {
    issue("sigma2", "not injective: det sigma2 == 0");
  } else {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      if (factors[i].degree() > 0) {
        issue("sigma2", "cokernel is not cyclic: invariant factor d" +
                            std::to_string(i + 1) + " = " + factors[i].str());
        break;
      }
  }

  if (ft.beta.is_zero())
    issue("beta", "must be nonzero");
  else if (!ft.beta.is_weighted_homogeneous(6))
    issue("beta", "must be weighted-homogeneous of degree 6");
  if (ft.beta.uses(Var::z)) issue("beta", "must not involve z");

  return report;
}

}  // namespace k3fib
