#include "k3fib/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace k3fib {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = TPoly(1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const TPoly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const TPoly& okj = o.at(k, j);
        if (!okj.is_zero()) r.at(i, j) += aik * okj;
      }
    }
  return r;
}

TPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("PolyMatrix: det of non-square");
  std::size_t n = rows_;
  if (n == 0) return TPoly(1);
  PolyMatrix m(*this);
  TPoly prev(1);
  int sign = 1;
  // Bareiss: after step k every entry is a (k+1)x(k+1) minor of the input,
  // so the division by the previous pivot is exact over the domain Q[t].
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return TPoly();  // column of zeros below: singular
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        TPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = TPoly::divide_exact(num, prev);
      }
      m.at(i, k) = TPoly();
    }
    prev = m.at(k, k);
  }
  TPoly d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

PolyMatrix PolyMatrix::eval_t(const Rational& c) const {
  PolyMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m.at(i, j) = TPoly(at(i, j).eval(c));
  return m;
}

}  // namespace k3fib
