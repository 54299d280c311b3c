#pragma once

#include <cstddef>

#include "k3fib/cover.hpp"
#include "k3fib/qmatrix.hpp"

namespace k3fib {

// Exactness data for the two fibrewise complexes built from a fibre algebra
// (E1 the weight-one bundle piece, E2 the weight-two one, A the fibre of
// the even part):
//
//   (*)   Sym^2(L^2 E1) (x) Sym^(n-2) E2  --i_n-->  Sym^n E2  -->  A_2n
//   (**)  E1 (x) L^2 E1 (x) A_(2n-2)      --j_n-->  E1 (x) A_2n  -->  A_(2n+1)
//
// with
//
//   i_n((xa^xb)(xc^xd) (x) r) = (S_ac * S_bd - S_ad * S_bc) * r,
//   j_n(l (x) (xi^xj) (x) r)  = xi (x) (S_jl * r) - xj (x) (S_il * r),
//
// where S_pq is the degree-two class of xp*xq.  All matrices are taken in
// the canonical monomial bases (graded-lex descending; symbol monomials in
// exponent order over the fibre's six degree-two generators).
struct SequenceCheck {
  int degree = 0;
  std::size_t source_dim = 0;
  std::size_t middle_dim = 0;
  std::size_t target_dim = 0;
  std::size_t map_rank = 0;
  std::size_t projection_rank = 0;
  bool complex = false;        // projection . map == 0
  bool surjective = false;     // projection_rank == target_dim
  bool middle_exact = false;   // map_rank == middle_dim - projection_rank
};

// The matrices themselves (columns = source basis, rows = target basis).
QMatrix map_i_n(const FibreAlgebra& fibre, int n);  // n >= 2
QMatrix map_j_n(const FibreAlgebra& fibre, int n);  // n >= 1

// Full middle-exactness verdicts for (*) and (**) in one degree.
SequenceCheck check_sym_sequence(const FibreAlgebra& fibre, int n);
SequenceCheck check_skew_sequence(const FibreAlgebra& fibre, int n);

}  // namespace k3fib
