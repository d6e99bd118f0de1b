#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polechart {

// Nonincreasing sequence of positive integers.
using Partition = std::vector<int>;

inline int total(const Partition& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline bool is_partition(const Partition& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) return false;
    if (i && a[i] > a[i - 1]) return false;
  }
  return true;
}

// Sorts and drops zero parts; rejects negative parts.
inline Partition normalize(Partition a) {
  for (int v : a)
    if (v < 0) throw std::invalid_argument("negative part");
  a.erase(std::remove(a.begin(), a.end(), 0), a.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

// b_i = #{j : a_j >= i}.
inline Partition conjugate(const Partition& a) {
  Partition b;
  if (a.empty()) return b;
  int top = *std::max_element(a.begin(), a.end());
  for (int i = 1; i <= top; ++i)
    b.push_back(static_cast<int>(std::count_if(a.begin(), a.end(), [i](int v) { return v >= i; })));
  return b;
}

inline Partition partition_union(const Partition& a, const Partition& b) {
  Partition u = a;
  u.insert(u.end(), b.begin(), b.end());
  return normalize(u);
}

inline Partition partition_sum(const Partition& a, const Partition& b) {
  Partition s(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) s[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) s[i] += b[i];
  return s;
}

// First prefix length i (1-based) with a_1+..+a_i > b_1+..+b_i, or with unequal
// totals reported as the padded length; nullopt when a is majorized by b.
inline std::optional<std::size_t> majorization_violation(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return i + 1;
  }
  if (sa != sb) return len;
  return std::nullopt;
}

// a is majorized by b.
inline bool majorized(const Partition& a, const Partition& b) {
  return !majorization_violation(a, b).has_value();
}

// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::string to_string(const Partition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace polechart
