#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "partitions.hpp"
#include "polynomial.hpp"
#include "smith.hpp"

namespace polechart {

struct RealEigenvalue {
  Rational value;
  Partition segre;
};

// The pair a + b i, a - b i with b > 0.
struct ComplexPair {
  Rational re, im;
  Partition segre;
};

struct SpectralData {
  std::vector<RealEigenvalue> real;
  std::vector<ComplexPair> complex;

  int size() const {
    int n = 0;
    for (const auto& e : real) n += total(e.segre);
    for (const auto& e : complex) n += 2 * total(e.segre);
    return n;
  }

  void validate() const {
    for (std::size_t i = 0; i < real.size(); ++i) {
      if (real[i].segre.empty() || !is_partition(real[i].segre))
        throw std::invalid_argument("Segre characteristic must be a nonempty partition");
      for (std::size_t j = 0; j < i; ++j)
        if (real[j].value == real[i].value) throw std::invalid_argument("repeated real eigenvalue");
    }
    for (std::size_t i = 0; i < complex.size(); ++i) {
      if (complex[i].segre.empty() || !is_partition(complex[i].segre))
        throw std::invalid_argument("Segre characteristic must be a nonempty partition");
      if (sgn(complex[i].im) <= 0) throw std::invalid_argument("complex pair needs positive imaginary part");
      for (std::size_t j = 0; j < i; ++j)
        if (complex[j].re == complex[i].re && complex[j].im == complex[i].im)
          throw std::invalid_argument("repeated complex pair");
    }
  }
};

inline Partition weyr_characteristic(const Partition& segre) { return conjugate(segre); }

// tau_0 = 0, tau_i = w_{m-i+1}: ascending block sizes used by the centralizer.
inline std::vector<std::size_t> taus(const Partition& w) {
  std::vector<std::size_t> t{0};
  for (std::size_t i = w.size(); i-- > 0;) t.push_back(static_cast<std::size_t>(w[i]));
  return t;
}

inline std::vector<std::size_t> group_offsets(const Partition& w) {
  std::vector<std::size_t> off{0};
  for (int v : w) off.push_back(off.back() + static_cast<std::size_t>(v));
  return off;
}

// W(lambda): lambda I on the diagonal blocks, I_{w_i, w_{i+1}} on the block superdiagonal.
template <typename T>
Matrix<T> weyr_matrix(const T& lambda, const Partition& w) {
  auto off = group_offsets(w);
  Matrix<T> m(off.back(), off.back());
  for (std::size_t i = 0; i < off.back(); ++i) m(i, i) = lambda;
  for (std::size_t g = 0; g + 1 < w.size(); ++g)
    m.set_block(off[g], off[g + 1], embed_identity<T>(w[g], w[g + 1]));
  return m;
}

// diag(J_{m_1}(lambda), J_{m_2}(lambda), ...) with ones on the superdiagonal.
template <typename T>
Matrix<T> jordan_matrix(const T& lambda, const Partition& segre) {
  const std::size_t n = static_cast<std::size_t>(total(segre));
  Matrix<T> m(n, n);
  std::size_t pos = 0;
  for (int len : segre) {
    for (int t = 0; t < len; ++t) {
      m(pos + t, pos + t) = lambda;
      if (t + 1 < len) m(pos + t, pos + t + 1) = T(1);
    }
    pos += static_cast<std::size_t>(len);
  }
  return m;
}

// Q with W = Q^T J Q: Jordan position (chain i, step t) maps to Weyr position s_{t-1} + i.
inline RatMatrix jordan_weyr_permutation(const Partition& segre) {
  const Partition w = weyr_characteristic(segre);
  auto off = group_offsets(w);
  const std::size_t n = off.back();
  RatMatrix q(n, n);
  std::size_t jpos = 0;
  for (std::size_t i = 0; i < segre.size(); ++i)
    for (int t = 0; t < segre[i]; ++t) q(jpos++, off[t] + i) = 1;
  return q;
}

// Each z = x + y i becomes the cell [[x, y], [-y, x]].
inline RatMatrix realify(const Matrix<Gaussian>& z) {
  RatMatrix m(2 * z.rows(), 2 * z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) {
      m(2 * i, 2 * j) = z(i, j).re;
      m(2 * i, 2 * j + 1) = z(i, j).im;
      m(2 * i + 1, 2 * j) = -z(i, j).im;
      m(2 * i + 1, 2 * j + 1) = z(i, j).re;
    }
  return m;
}

inline Matrix<Gaussian> to_gaussian(const RatMatrix& m) {
  Matrix<Gaussian> g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
  return g;
}

// Rows of 1x2 cells [z1, z2] read as z1 + z2 i.
inline Matrix<Gaussian> cells_to_gaussian(const RatMatrix& m) {
  if (m.cols() % 2) throw std::invalid_argument("odd column count for complex cells");
  Matrix<Gaussian> g(m.rows(), m.cols() / 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = Gaussian(m(i, 2 * j), m(i, 2 * j + 1));
  return g;
}

inline RatMatrix gaussian_to_cells(const Matrix<Gaussian>& g) {
  RatMatrix m(g.rows(), 2 * g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      m(i, 2 * j) = g(i, j).re;
      m(i, 2 * j + 1) = g(i, j).im;
    }
  return m;
}

// Diamond expansion of a cell matrix: [z1, z2] -> [[z1, z2], [-z2, z1]].
inline RatMatrix diamond(const RatMatrix& cells) { return realify(cells_to_gaussian(cells)); }

// Block of the spectral matrix: a real Weyr block or a complex one.
struct SpectralBlock {
  bool is_complex = false;
  Rational re, im;
  Partition segre, weyr;
  std::size_t offset = 0;  // first column in the global matrix
  std::size_t width = 0;   // sum of w (complex blocks span 2 * width real columns)
  std::size_t real_width() const { return is_complex ? 2 * width : width; }
};

inline std::vector<SpectralBlock> spectral_blocks(const SpectralData& sd) {
  std::vector<SpectralBlock> out;
  std::size_t off = 0;
  for (const auto& e : sd.real) {
    SpectralBlock b{false, e.value, Rational(0), e.segre, weyr_characteristic(e.segre), off,
                    static_cast<std::size_t>(total(e.segre))};
    off += b.real_width();
    out.push_back(b);
  }
  for (const auto& e : sd.complex) {
    SpectralBlock b{true, e.re, e.im, e.segre, weyr_characteristic(e.segre), off,
                    static_cast<std::size_t>(total(e.segre))};
    off += b.real_width();
    out.push_back(b);
  }
  return out;
}

// A = diag(W(lambda_1), ..., W(lambda_p), W^(a_1, b_1), ...).
inline RatMatrix spectral_matrix(const SpectralData& sd) {
  std::vector<RatMatrix> blocks;
  for (const auto& b : spectral_blocks(sd)) {
    if (b.is_complex) blocks.push_back(realify(weyr_matrix(Gaussian(b.re, b.im), b.weyr)));
    else blocks.push_back(weyr_matrix(b.re, b.weyr));
  }
  return direct_sum(blocks);
}

inline RatMatrix real_jordan_matrix(const SpectralData& sd) {
  std::vector<RatMatrix> blocks;
  for (const auto& b : spectral_blocks(sd)) {
    if (b.is_complex) blocks.push_back(realify(jordan_matrix(Gaussian(b.re, b.im), b.segre)));
    else blocks.push_back(jordan_matrix(b.re, b.segre));
  }
  return direct_sum(blocks);
}

inline RatMatrix jordan_weyr_permutation(const SpectralData& sd) {
  std::vector<RatMatrix> blocks;
  for (const auto& b : spectral_blocks(sd)) {
    RatMatrix q = jordan_weyr_permutation(b.segre);
    blocks.push_back(b.is_complex ? realify(to_gaussian(q)) : q);
  }
  return direct_sum(blocks);
}

// alpha_n, alpha_{n-1}, ... read off the Segre characteristics, returned ascending.
inline InvariantChain invariant_chain(const SpectralData& sd) {
  const std::size_t n = static_cast<std::size_t>(sd.size());
  InvariantChain top(n, Poly(1));  // top[k] is alpha_{n-k}
  for (const auto& e : sd.real) {
    Poly lin = Poly::s() - Poly(e.value);
    for (std::size_t k = 0; k < e.segre.size(); ++k) top[k] *= power(lin, e.segre[k]);
  }
  for (const auto& e : sd.complex) {
    Poly quad(std::vector<Rational>{e.re * e.re + e.im * e.im, -2 * e.re, 1});
    for (std::size_t k = 0; k < e.segre.size(); ++k) top[k] *= power(quad, e.segre[k]);
  }
  return InvariantChain(top.rbegin(), top.rend());
}

// N = sum_k (2k - 1) deg alpha_{n-k+1}.
inline std::size_t centralizer_dimension(const InvariantChain& chain) {
  std::size_t n = chain.size(), dim = 0;
  for (std::size_t k = 1; k <= n; ++k) dim += (2 * k - 1) * static_cast<std::size_t>(chain[n - k].degree());
  return dim;
}

// ---- Centralizer of a single Weyr block over a field T ----

// Y_{1j} for j = 1..m; the rest of Y follows by taking top-left corners.
template <typename T>
struct CentralizerTop {
  Partition w;
  std::vector<Matrix<T>> y1;  // y1[j-1] is w_1 x w_j

  static CentralizerTop identity(const Partition& w) {
    CentralizerTop c{w, {}};
    for (std::size_t j = 0; j < w.size(); ++j) c.y1.emplace_back(w[0], w[j]);
    c.y1[0] = Matrix<T>::identity(w[0]);
    return c;
  }
};

inline std::size_t centralizer_param_count(const Partition& w) {
  std::size_t c = 0;
  for (int v : w) c += static_cast<std::size_t>(v) * v;
  return c;
}

// Free rows of column strip k of Y_{1j} (both 1-based): rows in row blocks i <= k + j - 1.
inline std::size_t free_rows(const Partition& w, std::size_t j, std::size_t k) {
  const auto tau = taus(w);
  return tau[std::min(k + j - 1, w.size())];
}

// Parameters fill D^{(j)}_{1,k} strips ordered by j then k, each row-major.
template <typename T>
CentralizerTop<T> centralizer_top(const Partition& w, const std::vector<T>& params) {
  if (params.size() != centralizer_param_count(w))
    throw std::invalid_argument("centralizer parameter count mismatch");
  const std::size_t m = w.size();
  const auto tau = taus(w);
  CentralizerTop<T> c{w, {}};
  std::size_t p = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    Matrix<T> y(w[0], w[j - 1]);
    for (std::size_t k = 1; k <= m - j + 1; ++k) {
      const std::size_t rows = free_rows(w, j, k);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t col = tau[k - 1]; col < tau[k]; ++col) y(r, col) = params[p++];
    }
    c.y1.push_back(std::move(y));
  }
  return c;
}

template <typename T>
Matrix<T> assemble_centralizer(const CentralizerTop<T>& c) {
  const Partition& w = c.w;
  const std::size_t m = w.size();
  auto off = group_offsets(w);
  Matrix<T> y(off.back(), off.back());
  std::vector<Matrix<T>> prev = c.y1;  // row i of blocks, Y_{i, i..m}
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i; j <= m; ++j) y.set_block(off[i - 1], off[j - 1], prev[j - i]);
    if (i == m) break;
    std::vector<Matrix<T>> next;
    for (std::size_t j = i + 1; j <= m; ++j)
      next.push_back(prev[j - i - 1].block(0, 0, w[i], w[j - 1]));
    prev = std::move(next);
  }
  return y;
}

template <typename T>
Matrix<T> centralizer_element(const Partition& w, const std::vector<T>& params) {
  return assemble_centralizer(centralizer_top(w, params));
}

// Global parameter count: real blocks first, each complex entry counted as two rationals.
inline std::size_t centralizer_dimension(const SpectralData& sd) {
  std::size_t n = 0;
  for (const auto& b : spectral_blocks(sd))
    n += (b.is_complex ? 2 : 1) * centralizer_param_count(b.weyr);
  return n;
}

inline RatMatrix centralizer_element(const SpectralData& sd, const std::vector<Rational>& params) {
  if (params.size() != centralizer_dimension(sd))
    throw std::invalid_argument("centralizer parameter count mismatch");
  std::vector<RatMatrix> blocks;
  std::size_t p = 0;
  for (const auto& b : spectral_blocks(sd)) {
    const std::size_t c = centralizer_param_count(b.weyr);
    if (b.is_complex) {
      std::vector<Gaussian> g;
      for (std::size_t k = 0; k < c; ++k, p += 2) g.emplace_back(params[p], params[p + 1]);
      blocks.push_back(realify(centralizer_element(b.weyr, g)));
    } else {
      std::vector<Rational> r(params.begin() + p, params.begin() + p + c);
      p += c;
      blocks.push_back(centralizer_element(b.weyr, r));
    }
  }
  return direct_sum(blocks);
}

inline std::vector<RatMatrix> centralizer_basis(const SpectralData& sd) {
  const std::size_t n = centralizer_dimension(sd);
  std::vector<RatMatrix> basis;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> e(n, Rational(0));
    e[k] = 1;
    basis.push_back(centralizer_element(sd, e));
  }
  return basis;
}

}  // namespace polechart
