#include "congruence/linalg.hpp"

namespace congruence {

template <ExactField F>
RowEchelon<F> rref(const F& field, Matrix<typename F::Elem> m) {
  RowEchelon<F> out;
  if (m.empty()) return out;
  const std::size_t nrows = m.size();
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && field.is_zero(m[p][c])) ++p;
    if (p == nrows) continue;
    std::swap(m[r], m[p]);
    auto inv = field.inv(m[r][c]);
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = field.mul(m[r][j], inv);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || field.is_zero(m[i][c])) continue;
      auto factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        m[i][j] = field.sub(m[i][j], field.mul(factor, m[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <ExactField F>
std::size_t rank(const F& field, const Matrix<typename F::Elem>& m) {
  return rref(field, m).pivots.size();
}

template <ExactField F>
Matrix<typename F::Elem> nullspace(const F& field, const Matrix<typename F::Elem>& m, std::size_t ncols) {
  auto ech = rref(field, m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  Matrix<typename F::Elem> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(ncols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      v[ech.pivots[i]] = field.neg(ech.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
typename F::Elem determinant(const F& field, Matrix<typename F::Elem> m) {
  const std::size_t n = m.size();
  auto det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && field.is_zero(m[p][c])) ++p;
    if (p == n) return field.zero();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = field.neg(det);
    }
    det = field.mul(det, m[c][c]);
    auto inv = field.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(m[i][c])) continue;
      auto factor = field.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j) m[i][j] = field.sub(m[i][j], field.mul(factor, m[c][j]));
    }
  }
  return det;
}

#define CONGRUENCE_INSTANTIATE_LINALG(F)                                                     \
  template RowEchelon<F> rref<F>(const F&, Matrix<F::Elem>);                                 \
  template std::size_t rank<F>(const F&, const Matrix<F::Elem>&);                            \
  template Matrix<F::Elem> nullspace<F>(const F&, const Matrix<F::Elem>&, std::size_t);      \
  template F::Elem determinant<F>(const F&, Matrix<F::Elem>);

CONGRUENCE_INSTANTIATE_LINALG(RationalField)
CONGRUENCE_INSTANTIATE_LINALG(PrimeField)

}  // namespace congruence
