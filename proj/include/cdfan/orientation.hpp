#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace cdfan {

/// Incidence signs or^sigma_tau for all cover pairs tau < sigma, including
/// the covers into the virtual maximal element, together with the chain
/// signs eps_x. Satisfies: around every length-2 interval the two sign
/// products cancel, so cellular differentials square to zero.
struct OrientationData {
  std::vector<int> cover_sign;          // aligned with poset.covers()
  std::vector<int> top_sign;            // per element; +-1 on maximal elements, 0 elsewhere
  std::map<std::pair<int, int>, int> cover_index;

  /// or^{hi}_{lo} for a cover pair lo < hi.
  int sign(int lo, int hi) const {
    auto it = cover_index.find({lo, hi});
    if (it == cover_index.end())
      throw InvalidPosetError("orientation queried on a non-cover pair");
    return cover_sign[it->second];
  }

  int sign_top(int max_elem) const { return top_sign[max_elem]; }

  /// eps for a maximal flag (element indices of ranks 1..n, ascending):
  /// or^{1hat}_{sigma_n} or^{sigma_n}_{sigma_{n-1}} ... or^{sigma_1}_{0hat}.
  int eps(const GradedPoset& p, const std::vector<int>& flag) const {
    int s = top_sign[flag.back()];
    int prev = p.zero_element();
    for (int z : flag) {
      s *= sign(prev, z);
      prev = z;
    }
    return s;
  }
};

namespace detail {

/// Solves a dense GF(2) system rows*x = rhs; returns solution with free
/// variables 0, or empty optional on inconsistency. Deterministic.
inline std::optional<std::vector<int>> gf2_solve(
    std::vector<std::vector<std::uint64_t>> rows, std::vector<int> rhs, int nvars) {
  const int words = (nvars + 63) / 64;
  auto get = [&](const std::vector<std::uint64_t>& r, int j) -> int {
    return static_cast<int>((r[j / 64] >> (j % 64)) & 1u);
  };
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < nvars && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && get(rows[sel], c) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    std::swap(rhs[sel], rhs[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || get(rows[i], c) == 0) continue;
      for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
      rhs[i] ^= rhs[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rhs[i]) return std::nullopt;
  std::vector<int> x(nvars, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

} // namespace detail

/// Computes a consistent incidence orientation rank by rank. For each
/// element the signs on its lower covers solve a small GF(2) system coming
/// from the diamond relations two ranks down; free choices default to +1 in
/// lexicographic cover order, so the result is deterministic.
inline OrientationData incidence_orientation(const GradedPoset& p) {
  OrientationData od;
  od.cover_sign.assign(p.covers().size(), 1);
  od.top_sign.assign(p.size(), 0);
  for (std::size_t k = 0; k < p.covers().size(); ++k)
    od.cover_index[p.covers()[k]] = static_cast<int>(k);

  auto solve_element = [&](const std::vector<int>& lower, // sorted lower covers of sigma
                           const std::vector<int>& grand, // elements two ranks below sigma
                           auto&& middles_of,             // grand elt -> the middles under sigma
                           auto&& lower_sign,             // (grand, middle) -> established sign
                           const std::string& what) -> std::vector<int> {
    const int nvars = static_cast<int>(lower.size());
    std::map<int, int> var_of;
    for (int j = 0; j < nvars; ++j) var_of[lower[j]] = j;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> rhs;
    const int words = (nvars + 63) / 64;
    for (int rho : grand) {
      std::vector<int> mids = middles_of(rho);
      if (mids.size() != 2)
        throw NoOrientationError("diamond failure above " + what);
      std::vector<std::uint64_t> row(words, 0);
      auto flip = [&](int tau) {
        int j = var_of.at(tau);
        row[j / 64] ^= (1ull << (j % 64));
      };
      flip(mids[0]);
      flip(mids[1]);
      int b = 1;  // signs multiply to -1 around the diamond
      if (lower_sign(rho, mids[0]) < 0) b ^= 1;
      if (lower_sign(rho, mids[1]) < 0) b ^= 1;
      rows.push_back(std::move(row));
      rhs.push_back(b);
    }
    auto sol = detail::gf2_solve(std::move(rows), std::move(rhs), nvars);
    if (!sol)
      throw NoOrientationError("no consistent orientation at " + what);
    return *sol;
  };

  // Elements rank 2..n, in index order (hence by ascending rank).
  for (int s = 0; s < p.size(); ++s) {
    if (p.rank(s) < 2) continue;
    std::vector<int> lower = p.lower_covers(s);
    std::sort(lower.begin(), lower.end());
    std::vector<int> grand;
    for (int z : p.down_set(s))
      if (p.rank(z) == p.rank(s) - 2) grand.push_back(z);
    auto middles_of = [&](int rho) {
      std::vector<int> mids;
      for (int tau : lower)
        if (p.leq(rho, tau)) mids.push_back(tau);
      return mids;
    };
    auto lower_sign = [&](int rho, int tau) { return od.sign(rho, tau); };
    std::vector<int> x = solve_element(lower, grand, middles_of, lower_sign,
                                       p.element(s).id);
    for (std::size_t j = 0; j < lower.size(); ++j)
      od.cover_sign[od.cover_index.at({lower[j], s})] = x[j] ? -1 : 1;
  }

  // Virtual top: signs on maximal elements.
  {
    std::vector<int> lower = p.maximal_elements();
    std::sort(lower.begin(), lower.end());
    std::vector<int> grand = p.elements_of_rank(p.rank_n() - 1);
    auto middles_of = [&](int rho) {
      std::vector<int> mids;
      for (int tau : lower)
        if (p.leq(rho, tau)) mids.push_back(tau);
      return mids;
    };
    auto lower_sign = [&](int rho, int tau) { return od.sign(rho, tau); };
    std::vector<int> x = solve_element(lower, grand, middles_of, lower_sign, "1-hat");
    for (std::size_t j = 0; j < lower.size(); ++j)
      od.top_sign[lower[j]] = x[j] ? -1 : 1;
  }
  return od;
}

/// Verifies every length-2 diamond relation (including through the virtual
/// top); equivalently, all cellular differentials built from the signs
/// compose to zero.
inline bool orientation_relations_ok(const GradedPoset& p, const OrientationData& od) {
  for (int s = 0; s < p.size(); ++s) {
    if (p.rank(s) < 2) continue;
    for (int rho : p.down_set(s)) {
      if (p.rank(rho) != p.rank(s) - 2) continue;
      std::vector<int> mids = detail::completed_middles(p, rho, s);
      if (mids.size() != 2) return false;
      int total = od.sign(mids[0], s) * od.sign(rho, mids[0]) +
                  od.sign(mids[1], s) * od.sign(rho, mids[1]);
      if (total != 0) return false;
    }
  }
  for (int rho : p.elements_of_rank(p.rank_n() - 1)) {
    std::vector<int> mids = detail::completed_middles(p, rho, p.size());
    if (mids.size() != 2) return false;
    int total = od.sign_top(mids[0]) * od.sign(rho, mids[0]) +
                od.sign_top(mids[1]) * od.sign(rho, mids[1]);
    if (total != 0) return false;
  }
  return true;
}

/// All maximal flags (chains 0 < s1 < ... < sn of element indices, the zero
/// cone excluded), in lexicographic element order. The eps map over these
/// flags is the sign data entering the evaluation map.
inline std::vector<std::vector<int>> maximal_flags(const GradedPoset& p) {
  std::vector<std::vector<int>> flags;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    if (static_cast<int>(cur.size()) == p.rank_n()) {
      flags.push_back(cur);
      return;
    }
    const std::vector<int>& ups =
        (last < 0) ? p.upper_covers(p.zero_element()) : p.upper_covers(last);
    std::vector<int> sorted_ups = ups;
    std::sort(sorted_ups.begin(), sorted_ups.end());
    for (int z : sorted_ups) {
      cur.push_back(z);
      extend(z);
      cur.pop_back();
    }
  };
  extend(-1);
  std::sort(flags.begin(), flags.end());
  return flags;
}

} // namespace cdfan
