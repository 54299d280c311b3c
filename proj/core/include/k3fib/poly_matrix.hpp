#pragma once

#include <cstddef>
#include <vector>

#include "k3fib/tpoly.hpp"

namespace k3fib {

// Dense matrix over Q[t].
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  TPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const TPoly& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  PolyMatrix operator*(const PolyMatrix& o) const;

  // Exact determinant by Bareiss elimination (fraction-free over Q[t]);
  // requires a square matrix.
  TPoly det() const;

  // Matrix with constant entries evaluated at t = c.
  PolyMatrix eval_t(const Rational& c) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<TPoly> a_;
};

}  // namespace k3fib
