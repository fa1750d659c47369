#pragma once

// Exact dense linear algebra: row reduction and nullspaces over a field, and
// fraction-free Bareiss determinants over any exact integral domain.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "congruence/exactfield.hpp"

namespace congruence {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <ExactField F>
struct RowEchelon {
  Matrix<typename F::Elem> rows;  // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;
};

template <ExactField F>
RowEchelon<F> rref(const F& field, Matrix<typename F::Elem> m);

template <ExactField F>
std::size_t rank(const F& field, const Matrix<typename F::Elem>& m);

/// Basis of {x : m x = 0}; `ncols` is needed when m has no rows.
template <ExactField F>
Matrix<typename F::Elem> nullspace(const F& field, const Matrix<typename F::Elem>& m, std::size_t ncols);

template <ExactField F>
typename F::Elem determinant(const F& field, Matrix<typename F::Elem> m);

/// Fraction-free determinant. `Ops` supplies zero(), is_zero(a), mul(a,b),
/// sub(a,b), neg(a) and exact_div(a,b) over the entry ring.
template <class T, class Ops>
T bareiss_determinant(Matrix<T> m, const Ops& ops) {
  const std::size_t n = m.size();
  if (n == 0) return ops.one();
  bool negate = false;
  T prev = ops.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ops.is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && ops.is_zero(m[r][k])) ++r;
      if (r == n) return ops.zero();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = ops.sub(ops.mul(m[k][k], m[i][j]), ops.mul(m[i][k], m[k][j]));
        m[i][j] = ops.exact_div(num, prev);
      }
      m[i][k] = ops.zero();
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? ops.neg(det) : det;
}

}  // namespace congruence
