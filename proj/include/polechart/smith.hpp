#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace polechart {

using PolyMatrix = Matrix<Poly>;

// Invariant polynomials alpha_1 | alpha_2 | ... | alpha_n, each monic.
using InvariantChain = std::vector<Poly>;

// Smith normal form diagonal of a square polynomial matrix by gcd elimination.
inline std::vector<Poly> smith_diagonal(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("smith form of non-square matrix");
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  std::vector<Poly> diag;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m(i, j).is_zero() && (bi == n || m(i, j).degree() < m(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      swap_rows(k, bi);
      swap_cols(k, bj);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, r] = divmod(m(i, k), m(k, k));
        for (std::size_t j = k; j < n; ++j) m(i, j) -= q * m(k, j);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, r] = divmod(m(k, j), m(k, k));
        for (std::size_t i = k; i < n; ++i) m(i, j) -= q * m(i, k);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(m(i, j) % m(k, k)).is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = k; j < n; ++j) m(k, j) += m(bad, j);
    }
    diag.push_back(m(k, k).monic());
  }
  return diag;
}

inline PolyMatrix characteristic_matrix(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic matrix of non-square matrix");
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Poly(Rational(-a(i, j)));
  for (std::size_t i = 0; i < n; ++i) m(i, i) += Poly::s();
  return m;
}

inline InvariantChain invariant_polynomials(const RatMatrix& a) {
  return smith_diagonal(characteristic_matrix(a));
}

inline std::vector<int> degrees(const InvariantChain& chain) {
  std::vector<int> d;
  for (const auto& p : chain) d.push_back(p.degree());
  return d;
}

}  // namespace polechart
