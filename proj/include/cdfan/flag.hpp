#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace cdfan {

/// Flag f- or h-data: one integer per rank subset S of {1..n}, keyed by
/// bitmask.
struct FlagVector {
  int n = 0;
  std::map<std::uint32_t, long long> entries;

  long long at(std::uint32_t mask) const {
    auto it = entries.find(mask);
    return it == entries.end() ? 0 : it->second;
  }

  std::uint32_t full() const { return (n >= 32) ? 0 : ((1u << n) - 1); }

  bool operator==(const FlagVector& o) const { return n == o.n && entries == o.entries; }
};

/// f_S = number of chains of nonzero cones with rank set exactly S.
/// Dynamic program over comparability between consecutive chosen ranks.
inline FlagVector flag_f(const GradedPoset& p) {
  require_valid(p);
  const int n = p.rank_n();
  FlagVector f;
  f.n = n;
  std::vector<std::vector<int>> by_rank(n + 1);
  for (int r = 1; r <= n; ++r) by_rank[r] = p.elements_of_rank(r);

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask == 0) { f.entries[0] = 1; continue; }
    std::vector<int> ranks;
    for (int r = 1; r <= n; ++r)
      if (mask & (1u << (r - 1))) ranks.push_back(r);
    // counts[z] = chains through the ranks processed so far, ending at z
    std::map<int, long long> counts;
    for (int z : by_rank[ranks[0]]) counts[z] = 1;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
      std::map<int, long long> next;
      for (int w : by_rank[ranks[k]]) {
        long long total = 0;
        for (const auto& [z, c] : counts)
          if (p.leq(z, w)) total += c;
        if (total) next[w] = total;
      }
      counts = std::move(next);
    }
    long long total = 0;
    for (const auto& [z, c] : counts) total += c;
    f.entries[mask] = total;
  }
  return f;
}

/// h_S = sum over T subset S of (-1)^{|S \ T|} f_T.
inline FlagVector flag_h_from_f(const FlagVector& f) {
  FlagVector h;
  h.n = f.n;
  for (std::uint32_t s = 0; s < (1u << f.n); ++s) {
    long long total = 0;
    // iterate subsets t of s
    std::uint32_t t = s;
    while (true) {
      int sign = (__builtin_popcount(s ^ t) % 2 == 0) ? 1 : -1;
      total += sign * f.at(t);
      if (t == 0) break;
      t = (t - 1) & s;
    }
    h.entries[s] = total;
  }
  return h;
}

inline FlagVector flag_h(const GradedPoset& p) { return flag_h_from_f(flag_f(p)); }

inline bool flag_h_self_dual(const FlagVector& h) {
  const std::uint32_t full = h.full();
  for (const auto& [s, v] : h.entries)
    if (v != h.at(full & ~s)) return false;
  return true;
}

/// Simplicial h-vector from the face count sequence (f_0, ..., f_n) with
/// f_i the number of i-dimensional cones, via
///   sum_i f_{n-i} (t-1)^i = sum_k h_{n-k} t^k.
inline std::vector<long long> simplicial_h(const std::vector<long long>& f) {
  if (f.empty() || f[0] != 1)
    throw LengthMismatchError("face count sequence must start with f_0 = 1");
  const int n = static_cast<int>(f.size()) - 1;
  // poly[k] = coefficient of t^k in sum_i f_{n-i}(t-1)^i
  std::vector<long long> poly(n + 1, 0);
  std::vector<long long> power{1};  // (t-1)^i, starting at i = 0
  for (int i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k < power.size(); ++k) poly[k] += f[n - i] * power[k];
    // power *= (t - 1)
    std::vector<long long> next(power.size() + 1, 0);
    for (std::size_t k = 0; k < power.size(); ++k) {
      next[k + 1] += power[k];
      next[k] -= power[k];
    }
    power = std::move(next);
  }
  std::vector<long long> h(n + 1, 0);
  for (int k = 0; k <= n; ++k) h[n - k] = poly[k];
  return h;
}

/// Face counts f_0..f_n of a fan poset (f_0 = 1 for the zero cone).
inline std::vector<long long> face_counts(const GradedPoset& p) {
  std::vector<long long> f(p.rank_n() + 1, 0);
  for (int i = 0; i < p.size(); ++i) f[p.rank(i)] += 1;
  return f;
}

} // namespace cdfan
