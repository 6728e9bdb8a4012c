#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nf/error.hpp"
#include "nf/rational.hpp"
#include "nf/unipoly.hpp"

namespace nf {

/// Row-major dense matrix. Only what the exact algorithms here need.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Row swaps on zero pivots flip the sign.
template <typename T>
T bareiss_determinant(Matrix<T> m, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return one;
  bool negate = false;
  T previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && detail::is_zero(m(swap_with, k))) ++swap_with;
      if (swap_with == n) return T();
      m.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T numer = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = detail::exact_quotient(numer, previous);
      }
      m(i, k) = T();
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

inline Rational determinant(const Matrix<Rational>& m) { return bareiss_determinant(m, Rational(1)); }
inline UniPoly determinant(const Matrix<UniPoly>& m) {
  return bareiss_determinant(m, UniPoly::constant(1));
}

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> reduce_rows(Matrix<Rational>& m);

std::size_t rank(Matrix<Rational> m);

/// Basis of {v : m v = 0}, returned in reduced echelon form with respect to
/// the column order (each vector has a leading 1 in a distinct column, and
/// zeros in the other vectors' leading columns).
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);

}  // namespace nf
