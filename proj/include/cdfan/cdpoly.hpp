#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "flag.hpp"
#include "matrix.hpp"
#include "squarefree.hpp"

namespace cdfan {

/// Homogeneous cd-polynomial of the stated degree with integer coefficients,
/// most significant letter first.
struct CdPolynomial {
  int degree = 0;
  std::map<std::string, long long> terms;

  long long coeff(const std::string& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }

  bool operator==(const CdPolynomial& o) const {
    return degree == o.degree && terms == o.terms;
  }

  bool nonnegative() const {
    for (const auto& [w, c] : terms)
      if (c < 0) return false;
    return true;
  }

  /// Image under the cd-to-t embedding, starting at t_{start_index}.
  SquarefreePoly phi_image(int start_index = 1) const {
    SquarefreePoly total;
    for (const auto& [w, c] : terms)
      total = total + phi_expand(w, start_index).scaled(Rational(c));
    return total;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms) {
      if (c == 0) continue;
      if (!s.empty()) s += " + ";
      if (c != 1 || w.empty()) s += std::to_string(c);
      if (c != 1 && !w.empty()) s += "*";
      s += w.empty() ? "" : w;
    }
    return s.empty() ? "0" : s;
  }
};

/// Flag h-polynomial sum_S h_S prod_{i in S} t_i as a squarefree polynomial.
inline SquarefreePoly h_polynomial(const FlagVector& h) {
  SquarefreePoly p;
  for (const auto& [mask, v] : h.entries) p.add_term(mask, Rational(v));
  return p;
}

/// Solves sum_w a_w phi(w) = sum_S h_S t^S exactly. The phi images of the
/// degree-n words are linearly independent, so the solution is unique when
/// it exists; a missing or non-integer solution raises NotInCdSpan with the
/// residual attached.
inline CdPolynomial cd_index_from_flag_h(const FlagVector& h) {
  if (h.at(0) != 1)
    throw NotInCdSpanError("flag h-vector must have h_emptyset = 1", "");
  const int n = h.n;
  std::vector<std::string> words = cd_words(n);
  std::vector<SquarefreePoly> images;
  images.reserve(words.size());
  for (const auto& w : words) images.push_back(phi_expand(w, 1));

  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s) masks.push_back(s);

  Matrix a(masks.size(), words.size());
  Matrix b(masks.size(), 1);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j)
      a(i, j) = images[j].coeff(masks[i]);
    b(i, 0) = Rational(h.at(masks[i]));
  }
  auto sol = a.solve(b);
  auto residual_string = [&](const Matrix* x) {
    SquarefreePoly residual = h_polynomial(h);
    if (x)
      for (std::size_t j = 0; j < words.size(); ++j)
        residual = residual - images[j].scaled((*x)(j, 0));
    return residual.str();
  };
  if (!sol)
    throw NotInCdSpanError("flag data is not in the span of cd-word images",
                           residual_string(nullptr));
  CdPolynomial cd;
  cd.degree = n;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const Rational& c = (*sol)(j, 0);
    if (!is_integer(c))
      throw NotInCdSpanError("cd coefficients are not integers", residual_string(&*sol));
    if (c != 0) cd.terms[words[j]] = to_int64(c);
  }
  // Exact round trip is part of the contract.
  if (!(cd.phi_image(1) == h_polynomial(h)))
    throw NotInCdSpanError("cd expansion does not reproduce the h-polynomial",
                           residual_string(&*sol));
  return cd;
}

/// Rank check: the phi images of all degree-n words are linearly
/// independent as squarefree coefficient vectors.
inline bool phi_images_independent(int n) {
  std::vector<std::string> words = cd_words(n);
  Matrix a(1u << n, words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    SquarefreePoly img = phi_expand(words[j], 1);
    for (std::uint32_t s = 0; s < (1u << n); ++s) a(s, j) = img.coeff(s);
  }
  return a.rank() == words.size();
}

} // namespace cdfan
