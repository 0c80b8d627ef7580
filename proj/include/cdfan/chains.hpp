#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "poset.hpp"

namespace cdfan {

/// Barycentric subdivision of a fan poset: the poset of chains of nonzero
/// cones, ordered by subchain containment. The empty chain is the new zero
/// element. Each chain carries its rank-set label S(x) and the subdivision
/// map pi(x) = top element of the chain.
struct ChainPoset {
  GradedPoset base;
  GradedPoset poset;                       // the chain poset itself
  std::vector<std::vector<int>> chain_elems; // base indices, ascending rank; [i] for poset element i
  std::vector<std::uint32_t> label_mask;   // S(x) as bitmask over ranks 1..n
  std::vector<int> pi;                     // base index of top element; -1 for the empty chain

  int rank_of(int i) const { return poset.rank(i); }
};

inline std::string chain_id(const GradedPoset& base, const std::vector<int>& chain) {
  if (chain.empty()) return "0";
  std::string id;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) id += "|";
    id += base.element(chain[k]).id;
  }
  return id;
}

/// Builds the barycentric subdivision. Chains run through nonzero cones
/// only; the subdivision of a rank-n complete fan poset is again rank n.
inline ChainPoset barycentric(const GradedPoset& p) {
  require_valid(p);
  ChainPoset bd;
  bd.base = p;

  // Enumerate all chains of nonzero elements by DFS in index order.
  std::vector<std::vector<int>> chains;
  chains.push_back({});  // empty chain
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    for (int z = (last < 0 ? 0 : last + 1); z < p.size(); ++z) {
      if (p.rank(z) == 0) continue;
      if (last >= 0 && !(p.rank(z) > p.rank(last) && p.leq(last, z))) continue;
      cur.push_back(z);
      chains.push_back(cur);
      extend(z);
      cur.pop_back();
    }
  };
  extend(-1);

  std::vector<PosetElement> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& ch : chains) {
    elems.push_back({chain_id(p, ch), static_cast<int>(ch.size())});
    // lower covers: drop one entry
    for (std::size_t k = 0; k < ch.size(); ++k) {
      std::vector<int> sub = ch;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      covers.emplace_back(chain_id(p, sub), chain_id(p, ch));
    }
  }
  bd.poset = GradedPoset::build("B(" + p.name() + ")", p.rank_n(), std::move(elems), covers);

  bd.chain_elems.resize(bd.poset.size());
  bd.label_mask.assign(bd.poset.size(), 0);
  bd.pi.assign(bd.poset.size(), -1);
  for (const auto& ch : chains) {
    int i = bd.poset.index_of(chain_id(p, ch));
    bd.chain_elems[i] = ch;
    std::uint32_t mask = 0;
    for (int z : ch) mask |= 1u << (p.rank(z) - 1);
    bd.label_mask[i] = mask;
    bd.pi[i] = ch.empty() ? -1 : ch.back();
  }
  return bd;
}

/// Number of maximal chains (flags) of the base poset, i.e. maximal
/// elements of the subdivision.
inline int maximal_chain_count(const ChainPoset& bd) {
  int count = 0;
  for (int i = 0; i < bd.poset.size(); ++i)
    if (bd.rank_of(i) == bd.poset.rank_n()) ++count;
  return count;
}

} // namespace cdfan
