#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cdfan {

/// Hard cap on the number of grading variables. Variables are indexed 1-based.
inline constexpr int kMaxVars = 8;

/// A multidegree in the variables x_1..x_kMaxVars, finitely supported,
/// nonnegative. Comparison operators compare lexicographically (for map
/// keys); use leq()/geq() for the componentwise partial order.
class MultiDegree {
public:
  MultiDegree() { e_.fill(0); }

  static MultiDegree unit(int i) {
    MultiDegree d;
    d.set(i, 1);
    return d;
  }

  /// Squarefree degree from a bitmask: bit (i-1) set means exponent 1 on x_i.
  static MultiDegree from_mask(std::uint32_t mask) {
    MultiDegree d;
    for (int i = 1; i <= kMaxVars; ++i)
      if (mask & (1u << (i - 1))) d.set(i, 1);
    return d;
  }

  int get(int i) const { return e_[i]; }
  void set(int i, int v) { e_[i] = static_cast<std::int16_t>(v); }

  bool is_zero() const {
    for (int i = 1; i <= kMaxVars; ++i) if (e_[i] != 0) return false;
    return true;
  }

  bool is_squarefree() const {
    for (int i = 1; i <= kMaxVars; ++i) if (e_[i] > 1) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (int i = 1; i <= kMaxVars; ++i) if (e_[i] < 0) return false;
    return true;
  }

  /// Support as a bitmask (valid only for nonnegative degrees).
  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (int i = 1; i <= kMaxVars; ++i) if (e_[i] != 0) m |= 1u << (i - 1);
    return m;
  }

  int total() const {
    int t = 0;
    for (int i = 1; i <= kMaxVars; ++i) t += e_[i];
    return t;
  }

  MultiDegree operator+(const MultiDegree& o) const {
    MultiDegree r;
    for (int i = 1; i <= kMaxVars; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] + o.e_[i]);
    return r;
  }

  /// Componentwise difference; may have negative entries (check is_nonnegative).
  MultiDegree operator-(const MultiDegree& o) const {
    MultiDegree r;
    for (int i = 1; i <= kMaxVars; ++i) r.e_[i] = static_cast<std::int16_t>(e_[i] - o.e_[i]);
    return r;
  }

  bool leq(const MultiDegree& o) const {
    for (int i = 1; i <= kMaxVars; ++i) if (e_[i] > o.e_[i]) return false;
    return true;
  }

  auto operator<=>(const MultiDegree& o) const = default;

  std::string str() const {
    std::string s = "(";
    bool first = true;
    for (int i = 1; i <= kMaxVars; ++i) {
      if (e_[i] == 0) continue;
      if (!first) s += ",";
      s += "x" + std::to_string(i) + "^" + std::to_string(e_[i]);
      first = false;
    }
    if (first) s += "0";
    s += ")";
    return s;
  }

private:
  std::array<std::int16_t, kMaxVars + 1> e_;  // e_[0] unused
};

/// All subsets of `vars` (sorted variable indices) as bitmasks, ordered by
/// (popcount, numeric value). This is the canonical degree enumeration order.
inline std::vector<std::uint32_t> subset_masks(const std::vector<int>& vars) {
  std::vector<std::uint32_t> out;
  const std::size_t k = vars.size();
  out.reserve(1u << k);
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::uint32_t m = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (s & (1u << b)) m |= 1u << (vars[b] - 1);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

inline std::uint32_t full_mask(const std::vector<int>& vars) {
  std::uint32_t m = 0;
  for (int v : vars) m |= 1u << (v - 1);
  return m;
}

inline std::vector<int> mask_to_vars(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 1; i <= kMaxVars; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

/// Contiguous variable range [l, m]; empty when l > m.
inline std::vector<int> var_range(int l, int m) {
  std::vector<int> v;
  for (int i = l; i <= m; ++i) v.push_back(i);
  return v;
}

} // namespace cdfan
