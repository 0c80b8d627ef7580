#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "multidegree.hpp"
#include "rational.hpp"

namespace cdfan {

/// Polynomial with squarefree monomials: sum of a_S * prod_{i in S} t_i,
/// keyed by the support bitmask of S. Coefficients are exact rationals.
class SquarefreePoly {
public:
  SquarefreePoly() = default;

  static SquarefreePoly constant(const Rational& c) {
    SquarefreePoly p;
    if (c != 0) p.coeff_[0] = c;
    return p;
  }

  static SquarefreePoly variable(int i) {
    SquarefreePoly p;
    p.coeff_[1u << (i - 1)] = 1;
    return p;
  }

  const std::map<std::uint32_t, Rational>& terms() const { return coeff_; }

  Rational coeff(std::uint32_t mask) const {
    auto it = coeff_.find(mask);
    return it == coeff_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return coeff_.empty(); }

  void add_term(std::uint32_t mask, const Rational& c) {
    if (c == 0) return;
    auto it = coeff_.find(mask);
    if (it == coeff_.end()) {
      coeff_[mask] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }

  SquarefreePoly operator+(const SquarefreePoly& o) const {
    SquarefreePoly r = *this;
    for (const auto& [m, c] : o.coeff_) r.add_term(m, c);
    return r;
  }

  SquarefreePoly operator-(const SquarefreePoly& o) const {
    SquarefreePoly r = *this;
    for (const auto& [m, c] : o.coeff_) r.add_term(m, -c);
    return r;
  }

  SquarefreePoly scaled(const Rational& c) const {
    SquarefreePoly r;
    if (c == 0) return r;
    for (const auto& [m, a] : coeff_) r.coeff_[m] = a * c;
    return r;
  }

  /// Product. Throws if any monomial pair shares a variable (the result
  /// would not be squarefree).
  SquarefreePoly operator*(const SquarefreePoly& o) const {
    SquarefreePoly r;
    for (const auto& [m1, c1] : coeff_)
      for (const auto& [m2, c2] : o.coeff_) {
        if (m1 & m2)
          throw std::logic_error("SquarefreePoly: product is not squarefree");
        r.add_term(m1 | m2, c1 * c2);
      }
    return r;
  }

  bool operator==(const SquarefreePoly& o) const { return coeff_ == o.coeff_; }

  /// Evaluation with t_i = point[i-1] (variables beyond the vector are 0).
  Rational eval(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : coeff_) {
      Rational term = c;
      for (int i = 1; i <= kMaxVars; ++i) {
        if (!(m & (1u << (i - 1)))) continue;
        term *= (static_cast<std::size_t>(i) <= point.size()) ? point[i - 1] : Rational(0);
      }
      total += term;
    }
    return total;
  }

  /// Evaluation at t_i = t for all i: returns coefficients of t^0..t^k.
  std::vector<Rational> eval_equal_variable() const {
    std::vector<Rational> out;
    for (const auto& [m, c] : coeff_) {
      std::size_t k = static_cast<std::size_t>(__builtin_popcount(m));
      if (out.size() <= k) out.resize(k + 1, Rational(0));
      out[k] += c;
    }
    return out;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : coeff_) {
      if (!s.empty()) s += " + ";
      s += to_string(c);
      for (int v : mask_to_vars(m)) s += "*t" + std::to_string(v);
    }
    return s;
  }

private:
  std::map<std::uint32_t, Rational> coeff_;
};

inline bool is_cd_word(const std::string& w) {
  for (char ch : w)
    if (ch != 'c' && ch != 'd') return false;
  return true;
}

inline int cd_degree(const std::string& w) {
  int d = 0;
  for (char ch : w) d += (ch == 'c') ? 1 : 2;
  return d;
}

/// All cd-words of the given total degree (deg c = 1, deg d = 2), sorted
/// lexicographically with 'c' < 'd'.
inline std::vector<std::string> cd_words(int degree) {
  if (degree < 0) return {};
  std::vector<std::vector<std::string>> table(degree + 1);
  table[0] = {""};
  for (int n = 1; n <= degree; ++n) {
    for (const auto& w : table[n - 1]) table[n].push_back("c" + w);
    if (n >= 2)
      for (const auto& w : table[n - 2]) table[n].push_back("d" + w);
  }
  std::sort(table[degree].begin(), table[degree].end());
  return table[degree];
}

/// The embedding of a cd-word into squarefree t-polynomials: scanning the
/// word left to right with a variable cursor starting at t_l, a letter c
/// contributes a factor (t_i + 1) and advances the cursor by one, a letter d
/// contributes (t_i + t_{i+1}) and advances it by two. The empty word maps
/// to 1. Equivalent to the inductive last-letter rule
/// phi(fc + gd) = phi(f)(t_m + 1) + phi(g)(t_{m-1} + t_m), relabeled to
/// start at t_l.
inline SquarefreePoly phi_expand(const std::string& word, int start_index = 1) {
  if (!is_cd_word(word)) throw std::invalid_argument("phi_expand: not a cd-word");
  if (start_index < 1) throw std::invalid_argument("phi_expand: start index must be >= 1");
  SquarefreePoly result = SquarefreePoly::constant(1);
  int cursor = start_index;
  for (char ch : word) {
    SquarefreePoly factor;
    if (ch == 'c') {
      factor = SquarefreePoly::variable(cursor) + SquarefreePoly::constant(1);
      cursor += 1;
    } else {
      factor = SquarefreePoly::variable(cursor) + SquarefreePoly::variable(cursor + 1);
      cursor += 2;
    }
    if (cursor - 1 > kMaxVars)
      throw std::invalid_argument("phi_expand: word exceeds the variable cap");
    result = result * factor;
  }
  return result;
}

} // namespace cdfan
