#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multidegree.hpp"

namespace cdfan {

struct PosetElement {
  std::string id;
  int rank = 0;
};

/// Face poset of a complete fan: graded, with a unique minimum (the zero
/// cone) at rank 0 and maximal elements at rank n. The maximal element 1-hat
/// is virtual: it is adjoined on the fly by the checks that need it and is
/// never stored.
class GradedPoset {
public:
  GradedPoset() = default;

  /// Canonical constructor: sorts elements by (rank, id), covers
  /// lexicographically. Cover pairs reference element ids.
  static GradedPoset build(std::string name, int rank_n,
                           std::vector<PosetElement> elems,
                           const std::vector<std::pair<std::string, std::string>>& cover_ids) {
    GradedPoset p;
    p.name_ = std::move(name);
    p.rank_n_ = rank_n;
    std::sort(elems.begin(), elems.end(), [](const PosetElement& a, const PosetElement& b) {
      if (a.rank != b.rank) return a.rank < b.rank;
      return a.id < b.id;
    });
    p.elems_ = std::move(elems);
    for (std::size_t i = 0; i < p.elems_.size(); ++i)
      p.index_[p.elems_[i].id] = static_cast<int>(i);
    for (const auto& [lo, hi] : cover_ids) {
      auto li = p.index_.find(lo), hi_it = p.index_.find(hi);
      if (li == p.index_.end() || hi_it == p.index_.end())
        throw InvalidPosetError("cover references unknown element id: " + lo + " < " + hi);
      p.covers_.emplace_back(li->second, hi_it->second);
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    p.covers_.erase(std::unique(p.covers_.begin(), p.covers_.end()), p.covers_.end());
    p.up_.assign(p.elems_.size(), {});
    p.down_.assign(p.elems_.size(), {});
    for (const auto& [lo, hi] : p.covers_) {
      p.up_[lo].push_back(hi);
      p.down_[hi].push_back(lo);
    }
    return p;
  }

  const std::string& name() const { return name_; }
  int rank_n() const { return rank_n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<PosetElement>& elements() const { return elems_; }
  const PosetElement& element(int i) const { return elems_[i]; }
  int rank(int i) const { return elems_[i].rank; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }

  std::vector<int> elements_of_rank(int r) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (elems_[i].rank == r) out.push_back(i);
    return out;
  }

  /// Index of the rank-0 element; requires exactly one (validated separately,
  /// returns the first if several).
  int zero_element() const {
    for (int i = 0; i < size(); ++i)
      if (elems_[i].rank == 0) return i;
    throw InvalidPosetError("poset has no rank-0 element");
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (up_[i].empty()) out.push_back(i);
    return out;
  }

  /// leq(a,b): a <= b in the partial order generated by covers.
  bool leq(int a, int b) const {
    ensure_closure();
    return closure_[a][b] != 0;
  }

  /// All z with a <= z (ascending index order).
  std::vector<int> up_set(int a) const {
    ensure_closure();
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
      if (closure_[a][z]) out.push_back(z);
    return out;
  }

  std::vector<int> down_set(int b) const {
    ensure_closure();
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
      if (closure_[z][b]) out.push_back(z);
    return out;
  }

  /// Open interval (a, b) plus endpoints: all z with a <= z <= b.
  std::vector<int> interval(int a, int b) const {
    ensure_closure();
    std::vector<int> out;
    for (int z = 0; z < size(); ++z)
      if (closure_[a][z] && closure_[z][b]) out.push_back(z);
    return out;
  }

private:
  void ensure_closure() const {
    if (!closure_.empty()) return;
    const int n = size();
    closure_.assign(n, std::vector<std::uint8_t>(n, 0));
    // Process in index order: elements are sorted by rank, and covers go
    // up one rank, so all successors of i have larger index.
    for (int i = n - 1; i >= 0; --i) {
      closure_[i][i] = 1;
      for (int j : up_[i])
        for (int z = 0; z < n; ++z)
          if (closure_[j][z]) closure_[i][z] = 1;
    }
  }

  std::string name_;
  int rank_n_ = 0;
  std::vector<PosetElement> elems_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  mutable std::vector<std::vector<std::uint8_t>> closure_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const ValidationCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

/// Enumerates middles of the length-2 interval [a, b] in the 1-hat completed
/// poset. Indices: size() stands for the virtual top.
inline std::vector<int> completed_middles(const GradedPoset& p, int a, int b) {
  const int top = p.size();
  std::vector<int> mids;
  if (b == top) {
    // middles are maximal elements above a
    for (int z : p.up_set(a))
      if (p.rank(z) == p.rank(a) + 1 && p.upper_covers(z).empty()) mids.push_back(z);
  } else {
    for (int z : p.interval(a, b))
      if (p.rank(z) == p.rank(a) + 1) mids.push_back(z);
  }
  return mids;
}

} // namespace detail

/// Full invariant check: unique zero cone, consecutive covers, purity,
/// diamond property and the Eulerian interval-parity condition, both in the
/// poset completed with a virtual maximal element.
inline ValidationReport validate(const GradedPoset& p) {
  ValidationReport rep;
  const int n = p.rank_n();
  const int top = p.size();

  {
    ValidationCheck c{"unique_rank0", true, ""};
    int count = 0;
    for (int i = 0; i < p.size(); ++i)
      if (p.rank(i) == 0) ++count;
    if (count != 1) {
      c.pass = false;
      c.detail = "found " + std::to_string(count) + " rank-0 elements";
    }
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c{"rank_bounds", true, ""};
    if (n < 1) { c.pass = false; c.detail = "rank must be >= 1"; }
    for (int i = 0; i < p.size() && c.pass; ++i)
      if (p.rank(i) < 0 || p.rank(i) > n) {
        c.pass = false;
        c.detail = "element " + p.element(i).id + " has rank out of 0..n";
      }
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c{"covers_consecutive", true, ""};
    for (const auto& [lo, hi] : p.covers())
      if (p.rank(hi) != p.rank(lo) + 1) {
        c.pass = false;
        c.detail = p.element(lo).id + " < " + p.element(hi).id + " skips a rank";
        break;
      }
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c{"pure", true, ""};
    for (int i = 0; i < p.size(); ++i)
      if (p.upper_covers(i).empty() && p.rank(i) != n) {
        c.pass = false;
        c.detail = "maximal element " + p.element(i).id + " has rank " +
                   std::to_string(p.rank(i)) + " != " + std::to_string(n);
        break;
      }
    rep.checks.push_back(c);
  }
  {
    // Also require that every non-maximal element is covered (connectivity of
    // the grading); otherwise interval checks below would be vacuous.
    ValidationCheck c{"bounded_below", true, ""};
    for (int i = 0; i < p.size(); ++i)
      if (p.rank(i) > 0 && p.lower_covers(i).empty()) {
        c.pass = false;
        c.detail = "element " + p.element(i).id + " has no lower cover";
        break;
      }
    rep.checks.push_back(c);
  }

  bool structure_ok = rep.all_pass();

  {
    ValidationCheck c{"diamond", structure_ok, structure_ok ? "" : "skipped"};
    if (structure_ok) {
      for (int a = 0; a < p.size() && c.pass; ++a) {
        // [a, b] with rank difference 2, b ranging over elements and 1-hat.
        for (int b : p.up_set(a)) {
          if (p.rank(b) != p.rank(a) + 2) continue;
          auto mids = detail::completed_middles(p, a, b);
          if (mids.size() != 2) {
            c.pass = false;
            c.detail = "interval [" + p.element(a).id + "," + p.element(b).id +
                       "] has " + std::to_string(mids.size()) + " middles";
            break;
          }
        }
        if (c.pass && p.rank(a) == n - 1) {
          auto mids = detail::completed_middles(p, a, top);
          if (mids.size() != 2) {
            c.pass = false;
            c.detail = "interval [" + p.element(a).id + ",1-hat] has " +
                       std::to_string(mids.size()) + " middles";
          }
        }
      }
    }
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c{"eulerian", structure_ok, structure_ok ? "" : "skipped"};
    if (structure_ok) {
      // Interval parity balance over all intervals of the completed poset.
      for (int a = 0; a < p.size() && c.pass; ++a) {
        for (int b : p.up_set(a)) {
          if (b == a) continue;
          int odd = 0, even = 0;
          for (int z : p.interval(a, b))
            ((p.rank(z) % 2 == 0) ? even : odd)++;
          if (odd != even) {
            c.pass = false;
            c.detail = "interval [" + p.element(a).id + "," + p.element(b).id +
                       "] has parity imbalance";
            break;
          }
        }
        // interval [a, 1-hat]
        if (c.pass) {
          int odd = 0, even = 0;
          for (int z : p.up_set(a))
            ((p.rank(z) % 2 == 0) ? even : odd)++;
          (( (n + 1) % 2 == 0) ? even : odd)++;  // the virtual top itself
          if (odd != even) {
            c.pass = false;
            c.detail = "interval [" + p.element(a).id + ",1-hat] has parity imbalance";
          }
        }
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

/// Moebius function mu(a, b) on the completed poset, with b == p.size()
/// meaning the virtual top. Independent implementation used to cross-check
/// the parity-based Eulerian test.
inline long long mobius(const GradedPoset& p, int a, int b) {
  const int top = p.size();
  std::vector<int> zs;
  if (b == top) {
    zs = p.up_set(a);
    zs.push_back(top);
  } else {
    zs = p.interval(a, b);
  }
  // zs is ascending in index hence in rank; mu accumulates bottom-up.
  std::map<int, long long> mu;
  for (int z : zs) {
    if (z == a) { mu[z] = 1; continue; }
    long long s = 0;
    for (int w : zs) {
      if (w == z) break;
      bool w_le_z = (z == top) ? true : p.leq(w, z);
      if (w_le_z) s += mu[w];
    }
    mu[z] = -s;
  }
  return mu[b];
}

/// Checks mu(a,b) = (-1)^(rk b - rk a) on all intervals of the completion.
inline bool mobius_eulerian_ok(const GradedPoset& p) {
  const int top = p.size();
  for (int a = 0; a < p.size(); ++a) {
    for (int b : p.up_set(a)) {
      if (b == a) continue;
      long long expected = ((p.rank(b) - p.rank(a)) % 2 == 0) ? 1 : -1;
      if (mobius(p, a, b) != expected) return false;
    }
    long long expected = ((p.rank_n() + 1 - p.rank(a)) % 2 == 0) ? 1 : -1;
    if (mobius(p, a, top) != expected) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Built-in families

enum class FanFamily { SimplexFan, CubeFan, CrosspolyFan, PolygonFan };

inline std::string family_name(FanFamily f) {
  switch (f) {
    case FanFamily::SimplexFan: return "simplex";
    case FanFamily::CubeFan: return "cube";
    case FanFamily::CrosspolyFan: return "crosspoly";
    case FanFamily::PolygonFan: return "polygon";
  }
  return "?";
}

/// Face posets of the standard complete fans. `size` is the dimension for
/// simplex/cube/crosspoly and the number of rays for polygon (dimension 2).
/// The 1-dimensional complete fan is simplex_fan with size 1.
inline GradedPoset build_named(FanFamily family, int size, int dim_cap = 6) {
  std::vector<PosetElement> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  elems.push_back({"0", 0});

  auto check_dim = [&](int n) {
    if (n < 1) throw UnsupportedSizeError("fan dimension must be >= 1");
    if (n > dim_cap || n > kMaxVars - 1)
      throw UnsupportedSizeError("fan dimension " + std::to_string(n) +
                                 " exceeds the cap " + std::to_string(std::min(dim_cap, kMaxVars - 1)));
  };

  switch (family) {
    case FanFamily::SimplexFan: {
      const int n = size;
      check_dim(n);
      // Cones over the proper faces of an n-simplex with vertices 0..n:
      // nonempty subsets of {0..n} of size <= n.
      auto subset_id = [](std::uint32_t s) {
        std::string id;
        for (int v = 0; v <= 9; ++v)
          if (s & (1u << v)) id += static_cast<char>('0' + v);
        return id;
      };
      for (std::uint32_t s = 1; s < (1u << (n + 1)); ++s) {
        int k = __builtin_popcount(s);
        if (k > n) continue;
        elems.push_back({subset_id(s), k});
        if (k == 1) covers.emplace_back("0", subset_id(s));
        for (int v = 0; v <= n; ++v)
          if (!(s & (1u << v)) && k + 1 <= n)
            covers.emplace_back(subset_id(s), subset_id(s | (1u << v)));
      }
      return GradedPoset::build("simplex_fan_" + std::to_string(n), n,
                                std::move(elems), covers);
    }
    case FanFamily::CubeFan: {
      const int n = size;
      check_dim(n);
      // Cones over the proper faces of the n-cube: words over {-,+,*} with
      // at least one sign; rank = number of '*' + 1.
      std::vector<std::string> words;
      std::string w(n, '-');
      std::function<void(int)> gen = [&](int i) {
        if (i == n) { words.push_back(w); return; }
        for (char ch : {'-', '+', '*'}) { w[i] = ch; gen(i + 1); }
      };
      gen(0);
      for (const auto& word : words) {
        int stars = static_cast<int>(std::count(word.begin(), word.end(), '*'));
        if (stars == n) continue;
        elems.push_back({word, stars + 1});
        if (stars == 0) covers.emplace_back("0", word);
        for (int i = 0; i < n; ++i) {
          if (word[i] == '*') continue;
          std::string up = word;
          up[i] = '*';
          if (stars + 1 < n) covers.emplace_back(word, up);
        }
      }
      return GradedPoset::build("cube_fan_" + std::to_string(n), n,
                                std::move(elems), covers);
    }
    case FanFamily::CrosspolyFan: {
      const int n = size;
      check_dim(n);
      // Cones over the proper faces of the n-cross-polytope: partial sign
      // vectors over {-,+,.}; rank = size of the support.
      std::vector<std::string> words;
      std::string w(n, '.');
      std::function<void(int)> gen = [&](int i) {
        if (i == n) { words.push_back(w); return; }
        for (char ch : {'-', '+', '.'}) { w[i] = ch; gen(i + 1); }
      };
      gen(0);
      for (const auto& word : words) {
        int supp = n - static_cast<int>(std::count(word.begin(), word.end(), '.'));
        if (supp == 0) continue;
        elems.push_back({word, supp});
        if (supp == 1) covers.emplace_back("0", word);
        for (int i = 0; i < n; ++i) {
          if (word[i] == '.') continue;
          std::string dn = word;
          dn[i] = '.';
          if (supp - 1 >= 1) covers.emplace_back(dn, word);
        }
      }
      return GradedPoset::build("crosspoly_fan_" + std::to_string(n), n,
                                std::move(elems), covers);
    }
    case FanFamily::PolygonFan: {
      const int m = size;
      if (m < 3) throw UnsupportedSizeError("polygon fan needs at least 3 rays");
      for (int i = 0; i < m; ++i) {
        std::string ray = "r" + std::to_string(i);
        std::string cone = "c" + std::to_string(i);
        elems.push_back({ray, 1});
        elems.push_back({cone, 2});
        covers.emplace_back("0", ray);
      }
      for (int i = 0; i < m; ++i) {
        covers.emplace_back("r" + std::to_string(i), "c" + std::to_string(i));
        covers.emplace_back("r" + std::to_string((i + 1) % m), "c" + std::to_string(i));
      }
      return GradedPoset::build("polygon_fan_" + std::to_string(m), 2,
                                std::move(elems), covers);
    }
  }
  throw UnsupportedSizeError("unknown fan family");
}

inline void require_valid(const GradedPoset& p) {
  ValidationReport rep = validate(p);
  if (!rep.all_pass()) {
    std::string msg = "invalid poset " + p.name() + ":";
    for (const auto& c : rep.checks)
      if (!c.pass) msg += " [" + c.name + ": " + c.detail + "]";
    throw InvalidPosetError(msg);
  }
}

} // namespace cdfan
