#include "k3fib/smith.hpp"

#include <optional>
#include <utility>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {

// Elimination state.  Row operations on d are mirrored on u (left transform),
// column operations on v (right transform); u * input * v == d is a loop
// invariant whenever track is set.
struct Worker {
  PolyMatrix d, u, v;
  bool track;

  Worker(const PolyMatrix& m, bool track_transforms)
      : d(m), track(track_transforms) {
    if (track) {
      u = PolyMatrix::identity(m.rows());
      v = PolyMatrix::identity(m.cols());
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }

  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }

  // row a += f * row b
  void row_add(std::size_t a, std::size_t b, const TPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) += f * d.at(b, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += f * u.at(b, j);
  }

  // col a += f * col b
  void col_add(std::size_t a, std::size_t b, const TPoly& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += f * d.at(i, b);
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += f * v.at(i, b);
  }

  void row_scale(std::size_t a, const Rational& c) {
    for (std::size_t j = 0; j < d.cols(); ++j)
      d.at(a, j) = d.at(a, j).scaled(c);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j)
        u.at(a, j) = u.at(a, j).scaled(c);
  }

  // Deterministic pivot: minimal degree, then minimal coefficient height,
  // then row-major position, over the submatrix with corner (s, s).
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t s) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    mpz_class best_height;
    for (std::size_t i = s; i < d.rows(); ++i)
      for (std::size_t j = s; j < d.cols(); ++j) {
        const TPoly& e = d.at(i, j);
        if (e.is_zero()) continue;
        int deg = e.degree();
        if (best && deg > best_deg) continue;
        if (best && deg == best_deg) {
          mpz_class h = e.height();
          if (h >= best_height) continue;  // row-major wins ties exactly
          best = {{i, j}};
          best_height = std::move(h);
          continue;
        }
        best = {{i, j}};
        best_deg = deg;
        best_height = e.height();
      }
    return best;
  }

  void run() {
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t s = 0; s < n; ++s) {
      for (;;) {
        auto pivot = find_pivot(s);
        if (!pivot) {
          normalise(s);
          return;  // remaining block is zero, elimination complete
        }
        row_swap(s, pivot->first);
        col_swap(s, pivot->second);

        // Clear the pivot column with euclidean steps.  A nonzero remainder
        // means an entry of smaller degree appeared: re-pick the pivot.
        bool dirty = false;
        for (std::size_t i = s + 1; i < d.rows(); ++i) {
          if (d.at(i, s).is_zero()) continue;
          auto [q, r] = TPoly::divmod(d.at(i, s), d.at(s, s));
          row_add(i, s, -q);
          if (!r.is_zero()) dirty = true;
        }
        if (dirty) continue;

        for (std::size_t j = s + 1; j < d.cols(); ++j) {
          if (d.at(s, j).is_zero()) continue;
          auto [q, r] = TPoly::divmod(d.at(s, j), d.at(s, s));
          col_add(j, s, -q);
          if (!r.is_zero()) dirty = true;
        }
        if (dirty) continue;

        // Pivot row and column are clear.  Enforce the division chain: any
        // entry the pivot does not divide is folded into the pivot row, which
        // the next sweep then reduces below the pivot degree.
        bool offender = false;
        for (std::size_t i = s + 1; i < d.rows() && !offender; ++i)
          for (std::size_t j = s + 1; j < d.cols() && !offender; ++j) {
            if (d.at(i, j).is_zero()) continue;
            if (!TPoly::divmod(d.at(i, j), d.at(s, s)).second.is_zero()) {
              row_add(s, i, TPoly(1));
              offender = true;
            }
          }
        if (offender) continue;
        break;
      }
    }
    normalise(n);
  }

  // Make the first `upto` diagonal entries monic by unit row scalings.
  void normalise(std::size_t upto) {
    for (std::size_t s = 0; s < upto; ++s) {
      const TPoly& e = d.at(s, s);
      if (!e.is_zero() && !e.leading().is_one())
        row_scale(s, e.leading().inverse());
    }
  }
};

}  // namespace

std::vector<TPoly> SmithDecomposition::invariant_factors() const {
  std::vector<TPoly> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t s = 0; s < n; ++s) {
    if (d.at(s, s).is_zero()) break;
    out.push_back(d.at(s, s));
  }
  return out;
}

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
  Worker w(m, /*track_transforms=*/true);
  w.run();
  return SmithDecomposition{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<TPoly> smith_invariant_factors(const PolyMatrix& m) {
  Worker w(m, /*track_transforms=*/false);
  w.run();
  SmithDecomposition tmp{PolyMatrix(), std::move(w.d), PolyMatrix()};
  return tmp.invariant_factors();
}

}  // namespace k3fib
