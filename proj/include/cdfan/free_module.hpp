#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "multidegree.hpp"
#include "squarefree.hpp"

namespace cdfan {

/// Finitely generated free module over the polynomial ring on the listed
/// variables, graded with deg x_i = e_i. Generator degrees are squarefree
/// and supported on the variable set. The component at degree d has basis
/// { x^{d - deg g} * g : deg g <= d }, in generator order.
struct FreeGradedModule {
  std::vector<int> vars;  // sorted ascending; may be empty (base field)
  struct Gen {
    std::string id;
    MultiDegree deg;
  };
  std::vector<Gen> gens;

  std::size_t rank() const { return gens.size(); }

  bool var_supported(std::uint32_t mask) const {
    return (mask & ~full_mask(vars)) == 0;
  }

  void check_well_formed() const {
    for (const auto& g : gens) {
      if (!g.deg.is_squarefree() || !g.deg.is_nonnegative())
        throw InvalidPosetError("generator degree must be squarefree: " + g.id);
      if (!var_supported(g.deg.support()))
        throw InvalidPosetError("generator degree uses a variable outside the ring: " + g.id);
    }
  }
};

/// Generator indices of the component basis at degree d, in generator
/// order. Empty when d is unsupported or negative.
inline std::vector<std::size_t> component_basis(const FreeGradedModule& m, const MultiDegree& d) {
  std::vector<std::size_t> out;
  if (!d.is_nonnegative() || !m.var_supported(d.support())) return out;
  for (std::size_t i = 0; i < m.gens.size(); ++i)
    if (m.gens[i].deg.leq(d)) out.push_back(i);
  return out;
}

inline std::size_t component_dim(const FreeGradedModule& m, const MultiDegree& d) {
  return component_basis(m, d).size();
}

/// Hilbert function of the reduced module M/(all variables)M, supported on
/// squarefree degrees: one term t^{supp(deg g)} per generator.
inline SquarefreePoly hilbert_squarefree(const FreeGradedModule& m) {
  SquarefreePoly p;
  for (const auto& g : m.gens) p.add_term(g.deg.support(), 1);
  return p;
}

/// Number of generators per squarefree degree mask.
inline std::map<std::uint32_t, std::size_t> generator_counts(const FreeGradedModule& m) {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& g : m.gens) out[g.deg.support()]++;
  return out;
}

} // namespace cdfan
