#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "icelab/algebra/permutation.hpp"
#include "icelab/algebra/poly.hpp"
#include "icelab/algebra/scalar.hpp"
#include "icelab/algebra/series.hpp"

namespace icelab {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Determinant over a field by Gaussian elimination. Exact backend pivots on
/// the first nonzero entry; float backend uses partial pivoting.
template <class F>
F det(Matrix<F> m) {
  if (m.rows() != m.cols()) raise(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  F result(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    if constexpr (is_exact_v<F>) {
      for (std::size_t i = k; i < n; ++i) {
        if (!is_zero(m(i, k))) {
          pivot = i;
          break;
        }
      }
    } else {
      F best(0);
      for (std::size_t i = k; i < n; ++i) {
        F a = abs_value(m(i, k));
        if (a > best) {
          best = a;
          pivot = i;
        }
      }
    }
    if (pivot == n) return F(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      result = -result;
    }
    result *= m(k, k);
    const F inv = F(1) / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      F factor = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return result;
}

/// Fraction-free Bareiss elimination for polynomial entries; every division
/// is exact.
template <class F>
Poly<F> det(Matrix<Poly<F>> m) {
  if (m.rows() != m.cols()) raise(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly<F>::constant(0, F(1));
  const std::size_t nvars = m(0, 0).num_variables();
  Poly<F> previous = Poly<F>::constant(nvars, F(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == n) return Poly<F>(nvars);
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly<F> cross = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = poly_exact_div(cross, previous);
      }
      m(i, k) = Poly<F>(nvars);
    }
    previous = m(k, k);
  }
  Poly<F> result = m(n - 1, n - 1);
  return negate ? -result : result;
}

/// Leibniz expansion; works over any commutative ring with +, -, * (used for
/// jet-valued matrices whose pivots may vanish at the center).
template <class T>
T det_leibniz(const Matrix<T>& m, const T& one) {
  if (m.rows() != m.cols()) raise(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T total = one - one;
  for_each_permutation(n, [&](const Permutation& sigma) {
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, sigma[i]);
    if (sigma.sign() < 0) {
      total = total - term;
    } else {
      total = total + term;
    }
  });
  return total;
}

}  // namespace icelab
