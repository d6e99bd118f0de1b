#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace polechart {

struct SingularMatrix : std::domain_error {
  std::size_t column;
  explicit SingularMatrix(std::size_t c)
      : std::domain_error("singular matrix: column " + std::to_string(c + 1) +
                          " depends on the preceding columns"),
        column(c) {}
};

namespace detail {

// Fraction-free forward elimination on the first `ncols` columns.
// Returns pivot columns; row swaps are counted in `swaps`.
template <typename T>
std::vector<std::size_t> bareiss_forward(Matrix<T>& m, std::size_t ncols, std::size_t& swaps,
                                         bool stop_on_missing_pivot) {
  std::vector<std::size_t> pivots;
  T prev(1);
  std::size_t row = 0;
  swaps = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) {
      if (stop_on_missing_pivot) throw SingularMatrix(c);
      continue;
    }
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
      ++swaps;
    }
    const T piv = m(row, c);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const T f = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        T v = piv * m(i, j) - f * m(row, j);
        m(i, j) = v / prev;
      }
      m(i, c) = T(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++row;
  }
  if (stop_on_missing_pivot && pivots.size() < ncols) throw SingularMatrix(pivots.size());
  return pivots;
}

}  // namespace detail

template <typename T>
std::size_t rank(Matrix<T> m) {
  std::size_t swaps = 0;
  return detail::bareiss_forward(m, m.cols(), swaps, false).size();
}

template <typename T>
T det(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (m.rows() == 0) return T(1);
  std::size_t swaps = 0;
  auto piv = detail::bareiss_forward(m, m.cols(), swaps, false);
  if (piv.size() < m.rows()) return T(0);
  T d = m(m.rows() - 1, m.cols() - 1);
  return swaps % 2 ? T(T(0) - d) : d;
}

// Throws SingularMatrix naming the first column without a pivot.
template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> m = hstack(a, Matrix<T>::identity(n));
  std::size_t swaps = 0;
  detail::bareiss_forward(m, n, swaps, true);
  Matrix<T> x(n, n);
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc = m(ii, n + j);
      for (std::size_t k = ii + 1; k < n; ++k) acc -= m(ii, k) * x(k, j);
      x(ii, j) = acc / m(ii, ii);
    }
  }
  return x;
}

template <typename T>
bool is_invertible(const Matrix<T>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

// Reduced row echelon form; pivots are chosen at the least row index.
template <typename T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Basis of {v : m v = 0}, one vector per free column in ascending order.
template <typename T>
std::vector<Matrix<T>> nullspace(const Matrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Matrix<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix<T> v(m.cols(), 1);
    v(f, 0) = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = T(T(0) - r(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = b, or nullopt when inconsistent.
template <typename T>
std::optional<Matrix<T>> solve_any(const Matrix<T>& m, const Matrix<T>& b) {
  auto [r, pivots] = rref(hstack(m, b));
  const std::size_t n = m.cols();
  if (!pivots.empty() && pivots.back() >= n) return std::nullopt;
  Matrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, n + j);
  return x;
}

}  // namespace polechart
