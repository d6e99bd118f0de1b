#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "brunovsky.hpp"
#include "canonical.hpp"
#include "linalg.hpp"
#include "observability.hpp"
#include "reduction.hpp"
#include "smith.hpp"

namespace polechart {

struct Problem {
  RatMatrix F, G;
  SpectralData target;
};

struct Infeasible : std::domain_error {
  std::string criterion;
  std::size_t prefix;
  Infeasible(std::string crit, std::size_t i)
      : std::domain_error(crit + " condition fails at prefix " + std::to_string(i)),
        criterion(std::move(crit)),
        prefix(i) {}
};

struct DomainViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInClass : std::domain_error {
  using std::domain_error::domain_error;
};

struct FeasibilityReport {
  Partition k, r;
  InvariantChain chain;
  std::optional<std::size_t> rosenbrock, weyr_dual;
  bool nonempty = false;
  std::size_t centralizer_dim = 0;
  std::size_t n = 0, m = 0;

  bool feasible() const { return !rosenbrock && !weyr_dual; }
  // nm - N; negative on infeasible data.
  long dimension() const { return static_cast<long>(n * m) - static_cast<long>(centralizer_dim); }
};

inline FeasibilityReport analyze(const Problem& pb) {
  check_pair(pb.F, pb.G);
  pb.target.validate();
  if (static_cast<std::size_t>(pb.target.size()) != pb.F.rows())
    throw std::invalid_argument("target spectrum size differs from the state dimension");
  FeasibilityReport rep;
  rep.n = pb.F.rows();
  rep.m = pb.G.cols();
  rep.k = controllability_indices(pb.F, pb.G);
  rep.r = conjugate(rep.k);
  rep.chain = invariant_chain(pb.target);
  rep.rosenbrock = rosenbrock_violation(rep.k, rep.chain);
  rep.weyr_dual = weyr_dual_violation(rep.k, pb.target);
  if (rep.rosenbrock.has_value() != rep.weyr_dual.has_value())
    throw std::logic_error("feasibility criteria disagree");
  rep.nonempty = nonempty(rep.chain, rep.r);
  rep.centralizer_dim = centralizer_dimension(rep.chain);
  return rep;
}

// Gain and chart coordinates: x for the K_1 rows, K_2 for the remaining m - r rows.
struct ChartPoint {
  std::vector<Rational> x;
  RatMatrix k2;
};

class Chart {
 public:
  explicit Chart(Problem pb, std::optional<MultiIndex> idx = std::nullopt)
      : pb_(std::move(pb)), rep_(analyze(pb_)) {
    if (rep_.rosenbrock) throw Infeasible("Rosenbrock", *rep_.rosenbrock);
    bd_ = brunovsky(pb_.F, pb_.G);
    a_ = spectral_matrix(pb_.target);
    blocks_ = spectral_blocks(pb_.target);
    idx_ = idx ? *idx : leading_multi_index(pb_.target);
    if (idx_.size() != blocks_.size()) throw std::invalid_argument("multi-index needs one entry per spectral block");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      validate_block_index(idx_[b], blocks_[b].weyr, rank_g());
      free_.push_back(free_positions(blocks_[b].weyr, rank_g(), idx_[b]));
      pattern_.push_back(reduced_pattern(blocks_[b].weyr, rank_g(), idx_[b]));
    }
  }

  const Problem& problem() const { return pb_; }
  const FeasibilityReport& report() const { return rep_; }
  const BrunovskyData& brunovsky_data() const { return bd_; }
  const RatMatrix& spectral() const { return a_; }
  const MultiIndex& multi_index() const { return idx_; }
  std::size_t n() const { return rep_.n; }
  std::size_t m() const { return rep_.m; }
  std::size_t rank_g() const { return bd_.k.size(); }

  // nr - N coordinates for K_1 plus (m - r) n entries of K_2 give nm - N.
  std::size_t coordinate_count() const { return n() * rank_g() - rep_.centralizer_dim; }
  std::size_t dimension() const { return static_cast<std::size_t>(rep_.dimension()); }

  RatMatrix nu(const std::vector<Rational>& x) const {
    if (x.size() != coordinate_count())
      throw std::invalid_argument("expected " + std::to_string(coordinate_count()) + " coordinates, got " +
                                  std::to_string(x.size()));
    RatMatrix p1(rank_g(), n());
    std::size_t p = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const auto& blk = blocks_[b];
      const std::size_t cw = blk.is_complex ? 2 : 1;
      const auto& pat = pattern_[b];
      for (std::size_t i = 0; i < pat.rows(); ++i)
        for (std::size_t c = 0; c < pat.cols(); ++c)
          if (pat(i, c) == 1) p1(i, blk.offset + cw * c) = 1;
      for (auto [row, c] : free_[b])
        for (std::size_t s = 0; s < cw; ++s) p1(row, blk.offset + cw * c + s) = x[p++];
    }
    return p1;
  }

  RatMatrix observability(const std::vector<Rational>& x) const {
    return assemble_observability(a_, bd_.r, nu(x));
  }

  bool in_domain(const std::vector<Rational>& x) const { return is_invertible(observability(x)); }

  RatMatrix synthesize(const std::vector<Rational>& x, const RatMatrix& k2) const {
    RatMatrix p = observability(x);
    if (k2.rows() != m() - rank_g() || (k2.rows() && k2.cols() != n()))
      throw std::invalid_argument("K2 must be " + std::to_string(m() - rank_g()) + " x " + std::to_string(n()));
    RatMatrix k1;
    try {
      k1 = phi(a_, bd_.k, p);
    } catch (const SingularMatrix& e) {
      throw DomainViolation(std::string("x outside the chart domain: P_x ") + e.what());
    }
    RatMatrix kp = k2.rows() ? vstack(k1, k2) : k1;
    return psi_inverse(bd_.t, kp);
  }

  RatMatrix synthesize(const std::vector<Rational>& x) const { return synthesize(x, RatMatrix(m() - rank_g(), n())); }

  bool in_class(const RatMatrix& k) const {
    if (k.rows() != m() || k.cols() != n()) return false;
    return invariant_polynomials(pb_.F + pb_.G * k) == rep_.chain;
  }

  // Observability matrices for K_1 form a space of dimension N; pick an invertible one.
  RatMatrix recover_p1(const RatMatrix& k1) const {
    const std::size_t r = rank_g(), nn = n();
    RatMatrix mcl = bd_.Fp + bd_.Gp.block(0, 0, nn, r) * k1;
    RatMatrix lin(nn * nn, r * nn);
    for (std::size_t u = 0; u < r * nn; ++u) {
      RatMatrix e(r, nn);
      e(u / nn, u % nn) = 1;
      RatMatrix pe = assemble_observability(a_, bd_.r, e);
      RatMatrix res = pe * a_ - mcl * pe;
      for (std::size_t q = 0; q < nn * nn; ++q) lin(q, u) = res(q / nn, q % nn);
    }
    auto basis = nullspace(lin);
    if (basis.size() != rep_.centralizer_dim) throw NotInClass("gain does not assign the target invariant polynomials");
    auto to_p1 = [&](const RatMatrix& v) {
      RatMatrix p1(r, nn);
      for (std::size_t u = 0; u < r * nn; ++u) p1(u / nn, u % nn) = v(u, 0);
      return p1;
    };
    for (const auto& v : basis) {
      RatMatrix p1 = to_p1(v);
      if (is_invertible(assemble_observability(a_, bd_.r, p1))) return p1;
    }
    std::mt19937 gen(20240601u);
    for (int attempt = 0; attempt < 256; ++attempt) {
      RatMatrix v(r * nn, 1);
      for (const auto& b : basis) v += Rational(static_cast<long>(gen() % 201) - 100) * b;
      RatMatrix p1 = to_p1(v);
      if (is_invertible(assemble_observability(a_, bd_.r, p1))) return p1;
    }
    throw std::logic_error("no invertible observability matrix found");
  }

  ChartPoint coordinates(const RatMatrix& k) const {
    if (k.rows() != m() || k.cols() != n())
      throw std::invalid_argument("K must be " + std::to_string(m()) + " x " + std::to_string(n()));
    if (!in_class(k)) throw NotInClass("gain does not assign the target invariant polynomials");
    RatMatrix kp = psi(bd_.t, k);
    const std::size_t r = rank_g();
    RatMatrix k1 = kp.block(0, 0, r, n());
    RatMatrix k2 = kp.block(r, 0, m() - r, n());
    RatMatrix p1 = recover_p1(k1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      RatMatrix cols = block_columns(p1, blocks_[b]);
      std::size_t bad = 0;
      bool ok = blocks_[b].is_complex ? admissible_block(cells_to_gaussian(cols), blocks_[b].weyr, idx_[b], &bad)
                                      : admissible_block(cols, blocks_[b].weyr, idx_[b], &bad);
      if (!ok)
        throw DomainViolation("gain outside the chart: block " + std::to_string(b + 1) + " minor I_" +
                              std::to_string(bad) + " is singular");
    }
    RatMatrix red = reduce(pb_.target, p1, idx_).reduced;
    return {read_coordinates(red), k2};
  }

  std::vector<Rational> read_coordinates(const RatMatrix& reduced_p1) const {
    std::vector<Rational> x;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const std::size_t cw = blocks_[b].is_complex ? 2 : 1;
      for (auto [row, c] : free_[b])
        for (std::size_t s = 0; s < cw; ++s) x.push_back(reduced_p1(row, blocks_[b].offset + cw * c + s));
    }
    return x;
  }

  RatMatrix gain(const ChartPoint& pt) const { return synthesize(pt.x, pt.k2); }

 private:
  Problem pb_;
  FeasibilityReport rep_;
  BrunovskyData bd_;
  RatMatrix a_;
  std::vector<SpectralBlock> blocks_;
  MultiIndex idx_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> free_;
  std::vector<Matrix<int>> pattern_;
};

}  // namespace polechart
