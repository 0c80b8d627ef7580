#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "free_module.hpp"
#include "matrix.hpp"
#include "multidegree.hpp"

namespace cdfan {

/// Degree-homogeneous map between free graded modules whose matrix entries
/// are scalar multiples of monomials. Only the scalars are stored: the
/// monomial on entry (t, s) is forced by homogeneity to x^{deg s + shift -
/// deg t}. An entry is valid when that exponent is nonnegative and
/// supported on the target's variables. Restrictions to a smaller variable
/// set are modelled by maps whose target has fewer variables; exponents
/// involving dropped variables are identically zero there.
struct MonomialMap {
  FreeGradedModule source, target;
  MultiDegree shift;
  Matrix entries;  // target.rank() x source.rank()

  static MonomialMap zero(FreeGradedModule src, FreeGradedModule tgt, MultiDegree sh) {
    MonomialMap f;
    f.entries = Matrix(tgt.rank(), src.rank());
    f.source = std::move(src);
    f.target = std::move(tgt);
    f.shift = sh;
    return f;
  }

  static MonomialMap identity(const FreeGradedModule& m) {
    MonomialMap f = zero(m, m, MultiDegree());
    for (std::size_t i = 0; i < m.rank(); ++i) f.entries(i, i) = 1;
    return f;
  }

  bool entry_valid(std::size_t t, std::size_t s) const {
    MultiDegree expo = source.gens[s].deg + shift - target.gens[t].deg;
    return expo.is_nonnegative() && target.var_supported(expo.support());
  }

  bool support_valid() const {
    for (std::size_t t = 0; t < target.rank(); ++t)
      for (std::size_t s = 0; s < source.rank(); ++s)
        if (entries(t, s) != 0 && !entry_valid(t, s)) return false;
    return true;
  }

  /// Zeroes out entries whose monomial dies in the target (used when the
  /// target has fewer variables than the source).
  void prune_invalid() {
    for (std::size_t t = 0; t < target.rank(); ++t)
      for (std::size_t s = 0; s < source.rank(); ++s)
        if (entries(t, s) != 0 && !entry_valid(t, s)) entries(t, s) = 0;
  }

  MonomialMap compose(const MonomialMap& inner) const {
    // this(inner(x)); requires inner.target compatible with this->source.
    MonomialMap f;
    f.source = inner.source;
    f.target = target;
    f.shift = shift + inner.shift;
    f.entries = entries * inner.entries;
    f.prune_invalid();  // dropped variables may kill composite terms
    return f;
  }

  MonomialMap operator+(const MonomialMap& o) const {
    MonomialMap f = *this;
    f.entries = entries + o.entries;
    return f;
  }

  MonomialMap scaled(const Rational& c) const {
    MonomialMap f = *this;
    f.entries = entries.scaled(c);
    return f;
  }
};

/// Component of a map at source degree d: the scalar matrix from the
/// component basis at d to the component basis at d + shift. Rows/cols
/// record which generators participate.
struct MapComponent {
  std::vector<std::size_t> rows, cols;  // generator indices
  Matrix m;
};

inline MapComponent map_component(const MonomialMap& f, const MultiDegree& d) {
  MapComponent c;
  c.cols = component_basis(f.source, d);
  c.rows = component_basis(f.target, d + f.shift);
  c.m = Matrix(c.rows.size(), c.cols.size());
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    for (std::size_t j = 0; j < c.cols.size(); ++j) {
      std::size_t t = c.rows[i], s = c.cols[j];
      if (f.entries(t, s) == 0) continue;
      // The component entry survives iff the full monomial
      // x^{d + shift - deg t} is supported on the target variables.
      MultiDegree expo = d + f.shift - f.target.gens[t].deg;
      if (expo.is_nonnegative() && f.target.var_supported(expo.support()))
        c.m(i, j) = f.entries(t, s);
    }
  return c;
}

/// Exact preimage of a target component vector under f, at target degree d.
/// Returns the source component vector (free coordinates zero, deterministic
/// pivoting), or nullopt when the target is outside the image. A negative
/// source degree is a degree obstruction: nullopt.
inline std::optional<std::vector<Rational>> solve_preimage(
    const MonomialMap& f, const MultiDegree& target_degree,
    const std::vector<Rational>& target_component_vector) {
  MultiDegree src_d = target_degree - f.shift;
  if (!src_d.is_nonnegative()) {
    for (const auto& x : target_component_vector)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  MapComponent c = map_component(f, src_d);
  if (target_component_vector.size() != c.rows.size())
    throw std::invalid_argument("solve_preimage: target vector has wrong dimension");
  Matrix b(c.rows.size(), 1);
  for (std::size_t i = 0; i < c.rows.size(); ++i) b(i, 0) = target_component_vector[i];
  auto sol = c.m.solve(b);
  if (!sol) return std::nullopt;
  std::vector<Rational> x(c.cols.size());
  for (std::size_t j = 0; j < c.cols.size(); ++j) x[j] = (*sol)(j, 0);
  return x;
}

} // namespace cdfan
