#include "k3fib/milnor.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "k3fib/errors.hpp"
#include "k3fib/qmatrix.hpp"

namespace k3fib {

namespace {

using Exps = std::vector<int>;  // exponents aligned with the vars list

// f as a map from exponent tuples (over the chosen vars) to rationals.
std::map<Exps, Rational> tableau(const WPoly& f, const std::vector<Var>& vars) {
  std::map<Exps, Rational> out;
  for (const auto& [m, c] : f.terms()) {
    if (c.degree() > 0)
      throw_internal("milnor_number needs constant coefficients");
    Exps e(vars.size(), 0);
    int seen = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      e[i] = m.exp(vars[i]);
      seen += e[i];
    }
    int total = 0;
    for (int v = 0; v < kVarCount; ++v) total += m.e[static_cast<std::size_t>(v)];
    if (total != seen)
      throw_internal("milnor_number: germ involves a variable outside the "
                     "given list");
    out[std::move(e)] = c.constant();
  }
  return out;
}

int degree_of(const Exps& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

// Monomials of degree <= cap over n slots, lexicographic; index positions
// are the RowSpace columns.
void enumerate(std::size_t slot, int left, Exps& cur,
               std::vector<Exps>& out) {
  if (slot + 1 == cur.size()) {
    for (int e = 0; e <= left; ++e) {
      cur[slot] = e;
      out.push_back(cur);
    }
    cur[slot] = 0;
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur[slot] = e;
    enumerate(slot + 1, left - e, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

MilnorResult milnor_number(const WPoly& f, const std::vector<Var>& vars,
                           const MilnorOptions& options) {
  if (vars.empty()) throw_internal("milnor_number: empty variable list");
  const std::size_t n = vars.size();

  std::vector<std::map<Exps, Rational>> partials;
  partials.reserve(n);
  for (const Var v : vars) partials.push_back(tableau(f.derivative(v), vars));

  MilnorResult result;
  int prev = -1;
  int streak = 0;
  for (int cap = 1; cap <= options.truncation_cap; ++cap) {
    std::vector<Exps> monos;
    Exps cur(n, 0);
    enumerate(0, cap, cur, monos);
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    RowSpace space(monos.size());
    for (const Exps& m : monos) {
      for (const auto& g : partials) {
        std::map<std::size_t, Rational> row;
        for (const auto& [e, c] : g) {
          Exps sum(n);
          for (std::size_t i = 0; i < n; ++i) sum[i] = e[i] + m[i];
          if (degree_of(sum) > cap) continue;  // truncate the tail
          row[index.at(sum)] += c;
        }
        std::vector<std::pair<std::size_t, Rational>> sparse;
        sparse.reserve(row.size());
        for (auto& [col, val] : row)
          if (!val.is_zero()) sparse.emplace_back(col, val);
        if (!sparse.empty()) space.add(std::move(sparse));
      }
    }

    const int mu = static_cast<int>(monos.size() - space.rank());
    result.truncation_used = cap;
    if (mu == prev) {
      if (++streak >= options.stabilization_window) {
        result.isolated = true;
        result.milnor = mu;
        return result;
      }
    } else {
      streak = 0;
    }
    prev = mu;
  }
  result.isolated = false;
  result.milnor = prev;
  return result;
}

}  // namespace k3fib
