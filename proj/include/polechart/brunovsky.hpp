#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "canonical.hpp"
#include "linalg.hpp"
#include "partitions.hpp"
#include "smith.hpp"

namespace polechart {

struct Uncontrollable : std::domain_error {
  using std::domain_error::domain_error;
};

// [F' G'] = P^{-1} [F G] [[P, 0], [R, Q]].
struct FeedbackTransform {
  RatMatrix P, Q, R;
};

inline void check_pair(const RatMatrix& f, const RatMatrix& g) {
  if (f.rows() != f.cols()) throw std::invalid_argument("F must be square");
  if (g.rows() != f.rows()) throw std::invalid_argument("G must have as many rows as F");
  if (g.cols() == 0) throw std::invalid_argument("G has no columns");
}

inline RatMatrix krylov(const RatMatrix& f, const RatMatrix& g, std::size_t blocks) {
  RatMatrix out(f.rows(), 0), cur = g;
  for (std::size_t i = 0; i < blocks; ++i) {
    out = hstack(out, cur);
    cur = f * cur;
  }
  return out;
}

// k(F, G); r_1 + ... + r_i = rank [G FG ... F^{i-1} G] with r = k*.
inline Partition controllability_indices(const RatMatrix& f, const RatMatrix& g) {
  check_pair(f, g);
  const std::size_t n = f.rows();
  Partition r;
  std::size_t prev = 0;
  RatMatrix cur = g, acc(n, 0);
  for (std::size_t i = 0; i < n && prev < n; ++i) {
    acc = hstack(acc, cur);
    std::size_t rk = rank(acc);
    if (rk == prev) break;
    r.push_back(static_cast<int>(rk - prev));
    prev = rk;
    cur = f * cur;
  }
  if (prev < n) throw Uncontrollable("pair (F, G) is not controllable");
  return conjugate(r);
}

// State (step t, chain c), both 1-based, sits at r_1 + ... + r_{t-1} + c.
inline std::size_t chain_state(const Partition& r, std::size_t t, std::size_t c) {
  std::size_t s = 0;
  for (std::size_t i = 0; i + 1 < t; ++i) s += static_cast<std::size_t>(r[i]);
  return s + c - 1;
}

inline RatMatrix p_brunovsky_f(const Partition& k) {
  const Partition r = conjugate(k);
  const std::size_t n = static_cast<std::size_t>(total(k));
  RatMatrix f(n, n);
  for (std::size_t c = 1; c <= k.size(); ++c)
    for (std::size_t t = 1; t < static_cast<std::size_t>(k[c - 1]); ++t)
      f(chain_state(r, t, c), chain_state(r, t + 1, c)) = 1;
  return f;
}

inline RatMatrix p_brunovsky_g(const Partition& k, std::size_t m) {
  const Partition r = conjugate(k);
  const std::size_t n = static_cast<std::size_t>(total(k));
  if (m < k.size()) throw std::invalid_argument("fewer inputs than chains");
  RatMatrix g(n, m);
  for (std::size_t c = 1; c <= k.size(); ++c) g(chain_state(r, k[c - 1], c), c - 1) = 1;
  return g;
}

struct BrunovskyData {
  Partition k, r;
  RatMatrix Fp, Gp;
  FeedbackTransform t;
};

inline std::pair<RatMatrix, RatMatrix> apply(const FeedbackTransform& t, const RatMatrix& f,
                                             const RatMatrix& g) {
  RatMatrix pinv = inverse(t.P);
  return {pinv * (f * t.P + g * t.R), pinv * g * t.Q};
}

inline BrunovskyData brunovsky(const RatMatrix& f, const RatMatrix& g) {
  check_pair(f, g);
  const std::size_t n = f.rows(), m = g.cols();
  BrunovskyData out;
  out.k = controllability_indices(f, g);
  out.r = conjugate(out.k);
  out.Fp = p_brunovsky_f(out.k);
  out.Gp = p_brunovsky_g(out.k, m);
  if (f == out.Fp && g == out.Gp) {
    out.t = {RatMatrix::identity(n), RatMatrix::identity(m), RatMatrix(m, n)};
    return out;
  }

  // Column basis of G at least indices; dependent columns are cleared by Q0.
  std::vector<std::size_t> basis, dependent;
  {
    RatMatrix acc(n, 0);
    for (std::size_t j = 0; j < m; ++j) {
      RatMatrix trial = hstack(acc, g.col(j));
      if (rank(trial) > acc.cols()) {
        acc = trial;
        basis.push_back(j);
      } else {
        dependent.push_back(j);
      }
    }
  }
  const std::size_t rho = basis.size();
  RatMatrix g1 = RatMatrix(n, 0);
  for (auto j : basis) g1 = hstack(g1, g.col(j));
  RatMatrix q0(m, m);
  for (std::size_t i = 0; i < rho; ++i) q0(basis[i], i) = 1;
  for (std::size_t d = 0; d < dependent.size(); ++d) {
    auto coeff = solve_any(g1, g.col(dependent[d]));
    q0(dependent[d], rho + d) = 1;
    for (std::size_t i = 0; i < rho; ++i) q0(basis[i], rho + d) = -(*coeff)(i, 0);
  }

  // Greedy Krylov selection g_1..g_rho, F g_1..F g_rho, ...
  std::vector<std::size_t> mu(rho, 0);
  std::vector<bool> alive(rho, true);
  std::vector<RatMatrix> powers(rho);
  for (std::size_t c = 0; c < rho; ++c) powers[c] = g1.col(c);
  RatMatrix kept(n, 0);
  while (kept.cols() < n) {
    bool progress = false;
    for (std::size_t c = 0; c < rho; ++c) {
      if (!alive[c]) continue;
      RatMatrix trial = hstack(kept, powers[c]);
      if (rank(trial) > kept.cols()) {
        kept = trial;
        ++mu[c];
        powers[c] = f * powers[c];
        progress = true;
      } else {
        alive[c] = false;
      }
    }
    if (!progress) throw Uncontrollable("pair (F, G) is not controllable");
  }
  RatMatrix ctrl(n, 0);
  std::vector<std::size_t> last;  // column of F^{mu_c - 1} g_c in ctrl
  for (std::size_t c = 0; c < rho; ++c) {
    RatMatrix v = g1.col(c);
    for (std::size_t t = 0; t < mu[c]; ++t) {
      ctrl = hstack(ctrl, v);
      v = f * v;
    }
    last.push_back(ctrl.cols() - 1);
  }
  RatMatrix cinv = inverse(ctrl);

  std::vector<std::size_t> order(rho);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return mu[a] > mu[b]; });
  for (std::size_t i = 0; i < rho; ++i)
    if (static_cast<int>(mu[order[i]]) != out.k[i])
      throw std::logic_error("Krylov indices disagree with the rank sequence");

  RatMatrix tmat(n, n), hf(rho, n), b1(rho, rho);
  for (std::size_t i = 0; i < rho; ++i) {
    RatMatrix h = cinv.row(last[order[i]]);
    for (std::size_t t = 1; t <= mu[order[i]]; ++t) {
      tmat.set_block(chain_state(out.r, t, i + 1), 0, h);
      if (t == mu[order[i]]) b1.set_block(i, 0, h * g1);
      h = h * f;
    }
    hf.set_block(i, 0, h);
  }
  RatMatrix p = inverse(tmat);
  RatMatrix scale = RatMatrix::identity(m);
  scale.set_block(0, 0, inverse(b1));
  RatMatrix q = q0 * scale;
  RatMatrix lower(m, n);
  lower.set_block(0, 0, -(hf * p));
  out.t = {p, q, q * lower};
  return out;
}

// psi maps H_(F,G) to H_(Fp,Gp): K' = Q^{-1} (K P - R).
inline RatMatrix psi(const FeedbackTransform& t, const RatMatrix& k) {
  return inverse(t.Q) * (k * t.P - t.R);
}

inline RatMatrix psi_inverse(const FeedbackTransform& t, const RatMatrix& kp) {
  return (t.Q * kp + t.R) * inverse(t.P);
}

// (k_1, ..., k_m) majorized by (deg alpha_n, ..., deg alpha_1); returns the failing prefix.
inline std::optional<std::size_t> rosenbrock_violation(const Partition& k, const InvariantChain& chain) {
  auto d = degrees(chain);
  return majorization_violation(k, normalize(Partition(d.begin(), d.end())));
}

// Union of the Weyr characteristics of every eigenvalue; a complex pair counts twice.
inline Partition weyr_union(const SpectralData& sd) {
  Partition u;
  for (const auto& b : spectral_blocks(sd)) {
    u = partition_union(u, b.weyr);
    if (b.is_complex) u = partition_union(u, b.weyr);
  }
  return u;
}

inline std::optional<std::size_t> weyr_dual_violation(const Partition& k, const SpectralData& sd) {
  return majorization_violation(weyr_union(sd), conjugate(k));
}

}  // namespace polechart
