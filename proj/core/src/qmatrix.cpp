#include "k3fib/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fib {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& okj = o.at(k, j);
        if (!okj.is_zero()) r.at(i, j) += aik * okj;
      }
    }
  return r;
}

QMatrix QMatrix::rref() const {
  QMatrix m(*this);
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows_ && lead < m.cols_; ++r) {
    // Find a pivot row for this column, advancing columns as needed.
    std::size_t i = r;
    while (true) {
      if (i < m.rows_ && m.at(i, lead).is_zero()) {
        ++i;
        continue;
      }
      if (i == m.rows_) {
        ++lead;
        if (lead == m.cols_) return m;
        i = r;
        continue;
      }
      break;
    }
    if (i != r)
      for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(i, j), m.at(r, j));
    Rational inv = m.at(r, lead).inverse();
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t k = 0; k < m.rows_; ++k) {
      if (k == r || m.at(k, lead).is_zero()) continue;
      Rational f = m.at(k, lead);
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(k, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  return m;
}

std::size_t QMatrix::rank() const {
  QMatrix m = rref();
  std::size_t rk = 0;
  for (std::size_t i = 0; i < m.rows_; ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < m.cols_; ++j)
      if (!m.at(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

bool RowSpace::add(std::vector<std::pair<std::size_t, Rational>> row) {
  // Reduce against known pivots until the row dies or yields a new pivot.
  for (;;) {
    // Drop explicit zeros and find the leading entry.
    std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
    if (row.empty()) return false;
    std::size_t lead = row.front().first;
    const std::vector<std::pair<std::size_t, Rational>>* hit = nullptr;
    for (const auto& [pc, prow] : pivots_) {
      if (pc == lead) {
        hit = &prow;
        break;
      }
    }
    if (!hit) {
      // Normalise to a leading 1 and store.
      Rational inv = row.front().second.inverse();
      for (auto& e : row) e.second *= inv;
      pivots_.emplace_back(lead, std::move(row));
      return true;
    }
    // row -= row[lead] * pivot_row (both sorted by column: merge).
    Rational f = row.front().second;
    std::vector<std::pair<std::size_t, Rational>> merged;
    merged.reserve(row.size() + hit->size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < hit->size()) {
      if (b == hit->size() || (a < row.size() && row[a].first < (*hit)[b].first)) {
        merged.push_back(row[a++]);
      } else if (a == row.size() || (*hit)[b].first < row[a].first) {
        merged.emplace_back((*hit)[b].first, -(f * (*hit)[b].second));
        ++b;
      } else {
        Rational v = row[a].second - f * (*hit)[b].second;
        if (!v.is_zero()) merged.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
}

}  // namespace k3fib
