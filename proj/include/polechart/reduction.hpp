#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace polechart {

// I_1, ..., I_m for one Weyr block; 0-based rows, I_j extends I_{j-1} by an increasing run.
using BlockIndex = std::vector<std::vector<std::size_t>>;
using MultiIndex = std::vector<BlockIndex>;

struct NotAdmissible : std::domain_error {
  using std::domain_error::domain_error;
};

inline void validate_block_index(const BlockIndex& idx, const Partition& w, std::size_t r) {
  const auto tau = taus(w);
  if (idx.size() != w.size()) throw std::invalid_argument("multi-index needs one sequence per Weyr group");
  std::vector<bool> used(r, false);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j].size() != tau[j + 1]) throw std::invalid_argument("multi-index sequence has the wrong length");
    for (std::size_t q = 0; q < idx[j].size(); ++q) {
      if (idx[j][q] >= r) throw std::invalid_argument("multi-index row out of range");
      if (q < tau[j]) {
        if (idx[j][q] != idx[j - 1][q]) throw std::invalid_argument("multi-index sequences are not nested");
        continue;
      }
      if (used[idx[j][q]]) throw std::invalid_argument("multi-index repeats a row");
      if (q > tau[j] && idx[j][q] <= idx[j][q - 1])
        throw std::invalid_argument("multi-index increments must increase");
      used[idx[j][q]] = true;
    }
  }
}

// Rows of I_i \ I_{i-1} (i is 1-based).
inline std::vector<std::size_t> pivot_rows(const BlockIndex& idx, std::size_t i) {
  const std::size_t start = i >= 2 ? idx[i - 2].size() : 0;
  return {idx[i - 1].begin() + start, idx[i - 1].end()};
}

template <typename T>
Matrix<T> sub(const Matrix<T>& m, const std::vector<std::size_t>& rows, std::size_t c0, std::size_t nc) {
  return m.select_rows(rows).block(0, c0, rows.size(), nc);
}

// Every P(I_j, 1:tau_j) invertible; `failing` receives the first bad j (1-based).
template <typename T>
bool admissible_block(const Matrix<T>& p1, const Partition& w, const BlockIndex& idx,
                      std::size_t* failing = nullptr) {
  validate_block_index(idx, w, p1.rows());
  const auto tau = taus(w);
  for (std::size_t j = 1; j <= w.size(); ++j) {
    if (!is_invertible(sub(p1, idx[j - 1], 0, tau[j]))) {
      if (failing) *failing = j;
      return false;
    }
  }
  return true;
}

// Greedy extension by the least rows keeping P(I_j, 1:tau_j) of full rank.
template <typename T>
BlockIndex find_admissible_block(const Matrix<T>& p1, const Partition& w) {
  const auto tau = taus(w);
  BlockIndex idx;
  std::vector<std::size_t> cur;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    std::vector<std::size_t> chosen = cur;
    std::vector<std::size_t> fresh;
    for (std::size_t row = 0; row < p1.rows() && chosen.size() < tau[j]; ++row) {
      bool taken = false;
      for (auto c : chosen) taken = taken || c == row;
      if (taken) continue;
      auto trial = chosen;
      trial.push_back(row);
      if (rank(sub(p1, trial, 0, tau[j])) == trial.size()) {
        chosen = trial;
        fresh.push_back(row);
      }
    }
    if (chosen.size() < tau[j]) throw NotAdmissible("no admissible multi-index: first Weyr columns are rank deficient");
    cur = chosen;
    idx.push_back(cur);
  }
  return idx;
}

template <typename T>
struct BlockReduction {
  Matrix<T> reduced;  // P_1 Y
  Matrix<T> y;
};

// Column range of strip k inside group j (both 1-based) of a Weyr block.
inline std::pair<std::size_t, std::size_t> strip(const Partition& w, std::size_t j, std::size_t k) {
  const auto tau = taus(w);
  const auto off = group_offsets(w);
  return {off[j - 1] + tau[k - 1], tau[k] - tau[k - 1]};
}

template <typename T>
BlockReduction<T> reduce_block(const Matrix<T>& p1, const Partition& w, const BlockIndex& idx) {
  validate_block_index(idx, w, p1.rows());
  const std::size_t m = w.size();
  const auto tau = taus(w);
  Matrix<T> cur = p1;
  Matrix<T> y = Matrix<T>::identity(p1.cols());
  auto step = [&](const CentralizerTop<T>& top) {
    Matrix<T> e = assemble_centralizer(top);
    cur = cur * e;
    y = y * e;
  };
  for (std::size_t l = 1; l <= m; ++l) {
    const auto rows = pivot_rows(idx, l);
    if (rows.empty()) continue;
    // Type I: make the pivot block the identity.
    {
      auto [c0, nc] = strip(w, 1, l);
      Matrix<T> piv = sub(cur, rows, c0, nc);
      Matrix<T> t;
      try {
        t = inverse(piv);
      } catch (const SingularMatrix&) {
        throw NotAdmissible("pivot block " + std::to_string(l) + " is singular");
      }
      auto top = CentralizerTop<T>::identity(w);
      top.y1[0].set_block(tau[l - 1], tau[l - 1], t);
      step(top);
    }
    // Type II: clear the remaining constrained blocks of the pivot rows, group by group.
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t kmin = j == 1 ? l + 1 : (l + 1 > j ? l + 1 - j : 1);
      for (std::size_t k = kmin; k + j <= m + 1; ++k) {
        auto [c0, nc] = strip(w, j, k);
        Matrix<T> d = -sub(cur, rows, c0, nc);
        if (d.all_zero()) continue;
        auto top = CentralizerTop<T>::identity(w);
        top.y1[j - 1].set_block(tau[l - 1], tau[k - 1], d);
        step(top);
      }
    }
  }
  return {cur, y};
}

// Position codes of the reduced form: 0 fixed zero, 1 fixed one, -1 free.
inline Matrix<int> reduced_pattern(const Partition& w, std::size_t r, const BlockIndex& idx) {
  validate_block_index(idx, w, r);
  const std::size_t m = w.size();
  const auto off = group_offsets(w);
  Matrix<int> pat(r, off.back());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < off.back(); ++c) pat(i, c) = -1;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto rows = pivot_rows(idx, i);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t k = 1; k + j <= m + 1; ++k) {
          bool fixed = j == 1 ? k >= i : k + j > i;
          if (!fixed) continue;
          auto [c0, nc] = strip(w, j, k);
          for (std::size_t c = 0; c < nc; ++c) pat(rows[q], c0 + c) = (j == 1 && k == i && c == q) ? 1 : 0;
        }
    }
  }
  return pat;
}

// Free positions in chart order: the lower blocks of R^{(1)}, then the staircases of
// R^{(j)} for j >= 2, each block row-major; rows outside I_m follow, ascending, left to right.
inline std::vector<std::pair<std::size_t, std::size_t>> free_positions(const Partition& w, std::size_t r,
                                                                       const BlockIndex& idx) {
  validate_block_index(idx, w, r);
  const std::size_t m = w.size();
  const auto off = group_offsets(w);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t k = 1; k + j <= i && k + j <= m + 1; ++k) {
        if (j == 1 && k >= i) continue;
        auto [c0, nc] = strip(w, j, k);
        for (auto row : pivot_rows(idx, i))
          for (std::size_t c = 0; c < nc; ++c) out.emplace_back(row, c0 + c);
      }
  std::vector<bool> in_im(r, false);
  for (auto row : idx.back()) in_im[row] = true;
  for (std::size_t row = 0; row < r; ++row)
    if (!in_im[row])
      for (std::size_t c = 0; c < off.back(); ++c) out.emplace_back(row, c);
  return out;
}

// ---- Whole spectral matrix ----

struct Reduction {
  RatMatrix reduced;  // P_1 Y
  RatMatrix y;        // element of the centralizer of A
};

inline RatMatrix block_columns(const RatMatrix& p1, const SpectralBlock& b) {
  return p1.block(0, b.offset, p1.rows(), b.real_width());
}

inline MultiIndex find_admissible(const SpectralData& sd, const RatMatrix& p1) {
  MultiIndex idx;
  for (const auto& b : spectral_blocks(sd)) {
    RatMatrix cols = block_columns(p1, b);
    if (b.is_complex) idx.push_back(find_admissible_block(cells_to_gaussian(cols), b.weyr));
    else idx.push_back(find_admissible_block(cols, b.weyr));
  }
  return idx;
}

inline bool admissible(const SpectralData& sd, const RatMatrix& p1, const MultiIndex& idx) {
  auto blocks = spectral_blocks(sd);
  if (idx.size() != blocks.size()) throw std::invalid_argument("multi-index needs one entry per spectral block");
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    RatMatrix cols = block_columns(p1, blocks[t]);
    bool ok = blocks[t].is_complex ? admissible_block(cells_to_gaussian(cols), blocks[t].weyr, idx[t])
                                   : admissible_block(cols, blocks[t].weyr, idx[t]);
    if (!ok) return false;
  }
  return true;
}

inline Reduction reduce(const SpectralData& sd, const RatMatrix& p1, const MultiIndex& idx) {
  auto blocks = spectral_blocks(sd);
  if (idx.size() != blocks.size()) throw std::invalid_argument("multi-index needs one entry per spectral block");
  RatMatrix reduced(p1.rows(), 0);
  std::vector<RatMatrix> ys;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    RatMatrix cols = block_columns(p1, blocks[t]);
    if (blocks[t].is_complex) {
      auto red = reduce_block(cells_to_gaussian(cols), blocks[t].weyr, idx[t]);
      reduced = hstack(reduced, gaussian_to_cells(red.reduced));
      ys.push_back(realify(red.y));
    } else {
      auto red = reduce_block(cols, blocks[t].weyr, idx[t]);
      reduced = hstack(reduced, red.reduced);
      ys.push_back(red.y);
    }
  }
  return {reduced, direct_sum(ys)};
}

inline MultiIndex leading_multi_index(const SpectralData& sd) {
  MultiIndex idx;
  for (const auto& b : spectral_blocks(sd)) {
    const auto tau = taus(b.weyr);
    BlockIndex bi;
    for (std::size_t j = 1; j < tau.size(); ++j) {
      std::vector<std::size_t> seq;
      for (std::size_t q = 0; q < tau[j]; ++q) seq.push_back(q);
      bi.push_back(seq);
    }
    idx.push_back(bi);
  }
  return idx;
}

// Text form: blocks split by '|', sequences I_j by ';', rows by ','; rows are 1-based.
inline std::string to_string(const MultiIndex& idx) {
  std::string s;
  for (std::size_t b = 0; b < idx.size(); ++b) {
    if (b) s += "|";
    for (std::size_t j = 0; j < idx[b].size(); ++j) {
      if (j) s += ";";
      for (std::size_t q = 0; q < idx[b][j].size(); ++q) s += (q ? "," : "") + std::to_string(idx[b][j][q] + 1);
    }
  }
  return s;
}

inline MultiIndex parse_multi_index(const std::string& text) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
  };
  MultiIndex idx;
  for (const auto& blk : split(text, '|')) {
    BlockIndex bi;
    for (const auto& seq : split(blk, ';')) {
      std::vector<std::size_t> rows;
      for (const auto& tok : split(seq, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("malformed multi-index '" + text + "'");
        unsigned long v = std::stoul(tok);
        if (v == 0) throw ParseError("multi-index rows are 1-based");
        rows.push_back(v - 1);
      }
      bi.push_back(rows);
    }
    idx.push_back(bi);
  }
  return idx;
}

}  // namespace polechart
