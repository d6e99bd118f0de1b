#pragma once

#include <polechart/chart.hpp>

#include <random>
#include <vector>

namespace testing_support {

using namespace polechart;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational(long num = 5, long den = 3) {
  Rational q(uniform(-num, num), uniform(1, den));
  q.canonicalize();
  return q;
}

inline RatMatrix rand_matrix(std::size_t r, std::size_t c, long num = 5, long den = 1) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_rational(num, den);
  return m;
}

inline RatMatrix rand_invertible(std::size_t n, long num = 3) {
  for (;;) {
    RatMatrix m = rand_matrix(n, n, num);
    if (is_invertible(m)) return m;
  }
}

inline Partition rand_partition(int n) {
  auto all = partitions_of(n);
  return all[static_cast<std::size_t>(uniform(0, static_cast<long>(all.size()) - 1))];
}

// Up to two real eigenvalues and one complex pair, total size in [1, nmax].
inline SpectralData rand_spectrum(int nmax, int max_real = 2, int max_complex = 1) {
  for (;;) {
    SpectralData sd;
    int budget = static_cast<int>(uniform(1, nmax));
    int nreal = static_cast<int>(uniform(0, max_real));
    int ncx = static_cast<int>(uniform(0, max_complex));
    std::vector<long> used;
    for (int i = 0; i < nreal && budget > 0; ++i) {
      int sz = static_cast<int>(uniform(1, budget));
      long v;
      do v = uniform(-3, 3);
      while (std::find(used.begin(), used.end(), v) != used.end());
      used.push_back(v);
      sd.real.push_back({Rational(v), rand_partition(sz)});
      budget -= sz;
    }
    for (int i = 0; i < ncx && budget >= 2; ++i) {
      int sz = static_cast<int>(uniform(1, budget / 2));
      sd.complex.push_back({Rational(uniform(-2, 2)), Rational(uniform(1, 3)), rand_partition(sz)});
      budget -= 2 * sz;
    }
    if (sd.size() > 0) return sd;
  }
}

// A pair feedback equivalent to the p-Brunovsky pair of k, with m inputs.
inline std::pair<RatMatrix, RatMatrix> rand_pair(const Partition& k, std::size_t m) {
  const std::size_t n = static_cast<std::size_t>(total(k));
  RatMatrix fp = p_brunovsky_f(k), gp = p_brunovsky_g(k, m);
  RatMatrix p = rand_invertible(n), q = rand_invertible(m), r = rand_matrix(m, n, 2);
  RatMatrix pinv = inverse(p);
  RatMatrix g = p * gp * inverse(q);
  RatMatrix f = p * fp * pinv - g * r * pinv;
  return {f, g};
}

// Random controllability indices with the Rosenbrock condition met for sd.
inline std::optional<Partition> rand_feasible_indices(const SpectralData& sd, std::size_t m) {
  auto chain = invariant_chain(sd);
  std::vector<Partition> ok;
  for (const auto& k : partitions_of(sd.size()))
    if (k.size() <= m && !rosenbrock_violation(k, chain)) ok.push_back(k);
  if (ok.empty()) return std::nullopt;
  return ok[static_cast<std::size_t>(uniform(0, static_cast<long>(ok.size()) - 1))];
}

inline Problem rand_problem(int nmax, std::size_t m_max = 3) {
  for (;;) {
    SpectralData sd = rand_spectrum(nmax);
    std::size_t m = static_cast<std::size_t>(uniform(1, static_cast<long>(m_max)));
    auto k = rand_feasible_indices(sd, m);
    if (!k) continue;
    auto [f, g] = rand_pair(*k, m);
    return {f, g, sd};
  }
}

inline std::vector<Rational> rand_vector(std::size_t n, long num = 4, long den = 3) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_rational(num, den));
  return v;
}

// P_1 with P_(A; r) full rank, built without the chart parametrization.
inline RatMatrix rand_observability_p1(const RatMatrix& a, const Partition& r) {
  for (;;) {
    RatMatrix p1 = rand_matrix(r[0], a.rows(), 3);
    if (is_invertible(assemble_observability(a, r, p1))) return p1;
  }
}

}  // namespace testing_support
