#pragma once

#include <cstddef>
#include <vector>

#include "k3fib/rational.hpp"

namespace k3fib {

// Dense matrix over Q with exact Gaussian elimination.  Sized for the rank
// computations this library needs (tens of rows/columns), not for bulk
// numerics.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  QMatrix operator*(const QMatrix& o) const;

  // Rank by fraction-exact row reduction (the matrix itself is untouched).
  std::size_t rank() const;

  // Reduced row echelon form, returned as a fresh matrix.
  QMatrix rref() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Incremental row-space builder: feed sparse rows one at a time, each reduced
// against the pivots collected so far; rank() is the number of pivots.  Used
// where assembling a dense matrix first would be wasteful (Jacobian ideal
// spans and similar).
class RowSpace {
public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  // Row given as (column, value) pairs with strictly increasing columns.
  // Returns true when the row enlarged the space.
  bool add(std::vector<std::pair<std::size_t, Rational>> row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }

private:
  std::size_t dim_;
  // pivot column -> reduced row with leading 1 at that column
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> pivots_;
};

}  // namespace k3fib
