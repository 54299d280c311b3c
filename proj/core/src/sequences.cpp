#include "k3fib/sequences.hpp"

#include <map>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/graded.hpp"
#include "k3fib/rewrite.hpp"

namespace k3fib {

namespace {

// Working description of a fibre's even part: the y-presentation (without
// z) and the six-symbol basis of its degree-two piece.
struct Model {
  bool unigonal = false;
  Rational a, b;
  WPoly relation;  // zero for hyperelliptic fibres
  GradedPresentation apres;
  std::vector<SymId> basis2;
};

Model model_for(const FibreAlgebra& fibre) {
  Model m;
  m.unigonal = fibre.type.is_unigonal();
  m.apres.generators = {{"x1", 1}, {"x2", 1}, {"x3", 1}};
  if (m.unigonal) {
    if (!fibre.type.unigonal || !fibre.type.unigonal->normalized)
      throw_internal("sequence maps need a normalized unigonal fibre");
    m.a = fibre.type.unigonal->a;
    m.b = fibre.type.unigonal->b;
    m.relation = fibre.quadric;
    m.apres.generators.emplace_back("y", 2);
    m.apres.relations = {fibre.quadric};
    m.apres.has_y = true;
    m.basis2 = {SY, S12, S13, S22, S23, S33};
  } else {
    m.basis2 = {S11, S12, S13, S22, S23, S33};
  }
  return m;
}

SymId pair_symbol(int i, int j) {
  static const SymId table[3][3] = {{S11, S12, S13},
                                    {S12, S22, S23},
                                    {S13, S23, S33}};
  return table[i][j];
}

// Monomials of Sym^k over the model's six basis symbols, exponent-lex
// descending with the first basis symbol most significant.
void enumerate_sym(const Model& m, int k, std::size_t slot,
                   SymMonomial& cur, std::vector<SymMonomial>& out) {
  if (slot + 1 == m.basis2.size()) {
    cur.e[m.basis2[slot]] = static_cast<std::uint16_t>(k);
    out.push_back(cur);
    cur.e[m.basis2[slot]] = 0;
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur.e[m.basis2[slot]] = static_cast<std::uint16_t>(e);
    enumerate_sym(m, k - e, slot + 1, cur, out);
  }
  cur.e[m.basis2[slot]] = 0;
}

std::vector<SymMonomial> sym_basis(const Model& m, int k) {
  std::vector<SymMonomial> out;
  if (k < 0) return out;
  SymMonomial cur;
  enumerate_sym(m, k, 0, cur, out);
  return out;
}

using SymIndex = std::map<SymMonomial, std::size_t, SymLexLess>;

SymIndex index_of(const std::vector<SymMonomial>& basis) {
  SymIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Rewrites every S11 factor as a*S22 + b*S23 (the unigonal fibre relation
// in degree two); leaves other symbols untouched.
SymPoly eliminate_s11(const SymPoly& p, const Rational& a, const Rational& b) {
  SymPoly image;
  image.add_term(SymMonomial::gen(S22), a);
  image.add_term(SymMonomial::gen(S23), b);
  SymPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    SymMonomial rest = mono;
    const int k = rest.e[S11];
    rest.e[S11] = 0;
    SymPoly term = SymPoly::term(rest, coeff);
    for (int i = 0; i < k; ++i) term = term * image;
    out = out + term;
  }
  return out;
}

void add_sym_column(QMatrix& mat, std::size_t col, const SymPoly& v,
                    const SymIndex& rows) {
  for (const auto& [mono, coeff] : v.terms()) {
    const auto it = rows.find(mono);
    if (it == rows.end())
      throw_internal("symbol word " + mono.str() + " left the Sym basis");
    mat.at(it->second, col) += coeff;
  }
}

WPoly reduce_in_fibre(const Model& m, const WPoly& f) {
  return m.relation.is_zero() ? f : reduce_by_relation(f, m.relation);
}

// Projection Sym^n E2 -> A_2n in the monomial bases.
QMatrix sym_projection(const Model& m, const std::vector<SymMonomial>& symN,
                       const GradedBasis& a2n, const FibreType& type) {
  QMatrix proj(a2n.size(), symN.size());
  for (std::size_t c = 0; c < symN.size(); ++c) {
    const WPoly image = reduce_in_fibre(m, expand_symbol(symN[c], type));
    const std::vector<Rational> coords =
        rational_coordinates(image, a2n.monomials);
    for (std::size_t r = 0; r < coords.size(); ++r) proj.at(r, c) = coords[r];
  }
  return proj;
}

bool is_zero_matrix(const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

const std::pair<int, int> kWedge[3] = {{0, 1}, {0, 2}, {1, 2}};

}  // namespace

QMatrix map_i_n(const FibreAlgebra& fibre, int n) {
  if (n < 2) throw_internal("map_i_n needs degree >= 2");
  const Model m = model_for(fibre);
  const std::vector<SymMonomial> symN = sym_basis(m, n);
  const std::vector<SymMonomial> symR = sym_basis(m, n - 2);
  const SymIndex rows = index_of(symN);

  // Source basis: unordered pairs of wedge generators (w12, w13, w23),
  // pair-major over the Sym^(n-2) factor.
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < 3; ++p)
    for (int q = p; q < 3; ++q) pairs.emplace_back(p, q);

  QMatrix mat(symN.size(), pairs.size() * symR.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [ab, cd] = pairs[p];
    const auto [a, b] = kWedge[ab];
    const auto [c, d] = kWedge[cd];
    SymPoly plucker;
    plucker.add_term(SymMonomial::gen(pair_symbol(a, c)) *
                         SymMonomial::gen(pair_symbol(b, d)),
                     Rational(1));
    plucker.add_term(SymMonomial::gen(pair_symbol(a, d)) *
                         SymMonomial::gen(pair_symbol(b, c)),
                     Rational(-1));
    for (std::size_t r = 0; r < symR.size(); ++r) {
      SymPoly v = plucker * SymPoly::term(symR[r], Rational(1));
      if (m.unigonal) v = eliminate_s11(v, m.a, m.b);
      add_sym_column(mat, p * symR.size() + r, v, rows);
    }
  }
  return mat;
}

QMatrix map_j_n(const FibreAlgebra& fibre, int n) {
  if (n < 1) throw_internal("map_j_n needs degree >= 1");
  const Model m = model_for(fibre);
  const GradedBasis aPrev = graded_basis(m.apres, 2 * n - 2);
  const GradedBasis aMid = graded_basis(m.apres, 2 * n);
  const auto dim = aMid.size();

  QMatrix mat(3 * dim, 3 * 3 * aPrev.size());
  std::size_t col = 0;
  for (int l = 0; l < 3; ++l) {
    for (const auto& [i, j] : kWedge) {
      for (const Monomial& r : aPrev.monomials) {
        // x_i block gets S_{j,l} * r, x_j block gets -S_{i,l} * r.
        const Monomial sjl =
            Monomial::var(static_cast<Var>(j)) * Monomial::var(static_cast<Var>(l));
        const Monomial sil =
            Monomial::var(static_cast<Var>(i)) * Monomial::var(static_cast<Var>(l));
        const auto ci = rational_coordinates(
            reduce_in_fibre(m, WPoly::term(sjl * r, TPoly(1))), aMid.monomials);
        const auto cj = rational_coordinates(
            reduce_in_fibre(m, WPoly::term(sil * r, TPoly(1))), aMid.monomials);
        for (std::size_t k = 0; k < dim; ++k) {
          mat.at(i * dim + k, col) += ci[k];
          mat.at(j * dim + k, col) -= cj[k];
        }
        ++col;
      }
    }
  }
  return mat;
}

SequenceCheck check_sym_sequence(const FibreAlgebra& fibre, int n) {
  const Model m = model_for(fibre);
  const std::vector<SymMonomial> symN = sym_basis(m, n);
  const GradedBasis a2n = graded_basis(m.apres, 2 * n);
  const QMatrix map = map_i_n(fibre, n);
  const QMatrix proj = sym_projection(m, symN, a2n, fibre.type);

  SequenceCheck check;
  check.degree = n;
  check.source_dim = map.cols();
  check.middle_dim = symN.size();
  check.target_dim = a2n.size();
  check.map_rank = map.rank();
  check.projection_rank = proj.rank();
  check.complex = is_zero_matrix(proj * map);
  check.surjective = check.projection_rank == check.target_dim;
  check.middle_exact =
      check.map_rank == check.middle_dim - check.projection_rank;
  return check;
}

SequenceCheck check_skew_sequence(const FibreAlgebra& fibre, int n) {
  const Model m = model_for(fibre);
  const GradedBasis aMid = graded_basis(m.apres, 2 * n);
  const GradedBasis aTop = graded_basis(m.apres, 2 * n + 1);
  const QMatrix map = map_j_n(fibre, n);

  const auto dim = aMid.size();
  QMatrix proj(aTop.size(), 3 * dim);
  for (int i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const WPoly image = reduce_in_fibre(
          m, WPoly::term(Monomial::var(static_cast<Var>(i)) * aMid.monomials[k],
                         TPoly(1)));
      const auto coords = rational_coordinates(image, aTop.monomials);
      for (std::size_t r = 0; r < coords.size(); ++r)
        proj.at(r, i * dim + k) = coords[r];
    }
  }

  SequenceCheck check;
  check.degree = n;
  check.source_dim = map.cols();
  check.middle_dim = 3 * dim;
  check.target_dim = aTop.size();
  check.map_rank = map.rank();
  check.projection_rank = proj.rank();
  check.complex = is_zero_matrix(proj * map);
  check.surjective = check.projection_rank == check.target_dim;
  check.middle_exact =
      check.map_rank == check.middle_dim - check.projection_rank;
  return check;
}

}  // namespace k3fib
