#include "nf/linalg.hpp"

namespace nf {

std::vector<std::size_t> reduce_rows(Matrix<Rational>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix<Rational> m) { return reduce_rows(m).size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
  Matrix<Rational> reduced = m;
  const auto pivots = reduce_rows(reduced);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // One raw basis vector per free column.
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  // Canonicalize: reduced echelon form of the basis itself.
  Matrix<Rational> b(basis.size(), n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) b(r, c) = basis[r][c];
  }
  reduce_rows(b);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) basis[r][c] = b(r, c);
  }
  return basis;
}

}  // namespace nf
