#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "brunovsky.hpp"
#include "linalg.hpp"
#include "partitions.hpp"

namespace polechart {

// P = [P_1; P_2; ...; P_k] with P_{i+1} = (first r_{i+1} rows of P_i) A.
inline RatMatrix assemble_observability(const RatMatrix& a, const Partition& r, const RatMatrix& p1) {
  if (r.empty() || p1.rows() != static_cast<std::size_t>(r[0]) || p1.cols() != a.rows())
    throw std::invalid_argument("P_1 must be r_1 x dim(A)");
  RatMatrix p = p1, cur = p1;
  for (std::size_t i = 1; i < r.size(); ++i) {
    cur = cur.block(0, 0, r[i], cur.cols()) * a;
    p = vstack(p, cur);
  }
  return p;
}

// Row c of the result is p_c A^{k_c}.
inline RatMatrix chain_ends(const RatMatrix& a, const Partition& k, const RatMatrix& p) {
  const Partition r = conjugate(k);
  RatMatrix out(k.size(), p.cols());
  for (std::size_t c = 1; c <= k.size(); ++c) {
    RatMatrix row = p.row(chain_state(r, k[c - 1], c)) * a;
    out.set_block(c - 1, 0, row);
  }
  return out;
}

// phi(P) = [p_1 A^{k_1}; ...; p_r A^{k_r}] P^{-1}.
inline RatMatrix phi(const RatMatrix& a, const Partition& k, const RatMatrix& p) {
  return chain_ends(a, k, p) * inverse(p);
}

inline std::vector<int> sorted_ascending(std::vector<int> d) {
  std::sort(d.begin(), d.end());
  return d;
}

// w = conjugate of the degree sequence; nonempty iff every prefix of w stays below r.
inline bool nonempty_weyr(const std::vector<int>& deg, const Partition& r) {
  const Partition w = conjugate(normalize(Partition(deg.begin(), deg.end())));
  long sw = 0, sr = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sw += w[i];
    sr += i < r.size() ? r[i] : 0;
    if (sw > sr) return false;
  }
  return true;
}

// sum_{j > i} k_j >= deg alpha_1 + ... + deg alpha_{d-i}; i = 0 asks for n >= d.
inline bool nonempty_indices(const std::vector<int>& deg, const Partition& r) {
  const Partition k = conjugate(r);
  const std::vector<int> a = sorted_ascending(deg);
  const std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i) {
    long lhs = 0, rhs = 0;
    for (std::size_t j = i; j < k.size(); ++j) lhs += k[j];
    for (std::size_t j = 0; j < d - i; ++j) rhs += a[j];
    if (lhs < rhs) return false;
  }
  return true;
}

inline bool nonempty(const InvariantChain& chain, const Partition& r) {
  return nonempty_weyr(degrees(chain), r);
}

}  // namespace polechart
