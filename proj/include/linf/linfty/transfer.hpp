#pragma once

#include <optional>
#include <string>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/coalgebra/morphism.hpp"

namespace linf {

/// Deformation retract of (V, q_1) onto H with zero differential:
/// p i = id, id - i p = q_1 h + h q_1, h h = 0, h i = 0, p h = 0.
struct Contraction {
  GradedSpace cohomology;
  SymMap inclusion;  ///< i : H -> V
  SymMap projection; ///< p : V -> H
  SymMap homotopy;   ///< h : V -> V, degree -1
};

/// Splits each degree of V as B ⊕ H ⊕ C with C spanned by the pivot
/// columns of q_1, B = q_1(C) and H completing B inside the cocycles by
/// nullspace vectors in free-column order. H generators are named after the
/// free column they come from, so q_1 = 0 gives H = V. Asserts the
/// contraction identities.
Contraction contraction_from_cohomology(const GradedSpace &space, const SymMap &q1);

/// Name of the first violated contraction identity, if any.
std::optional<std::string> contraction_violation(const SymMap &q1, const Contraction &c);

struct TransferResult {
  Contraction contraction;
  Coderivation minimal; ///< R on H, r_1 = 0, truncated at N
  CoalgebraMorphism morphism; ///< F : (H, R) -> (V, Q), f_1 = i

  /// Lowest arity n >= 2 with r_n != 0.
  std::optional<int> lowest_nonzero() const;
};

/// Homotopy transfer: f_1 = i and for n >= 2
///   Φ_n = Σ_{k>=2} q_k(F^{(k)}) - Σ_{2<=j<n} f_j(R^{(j)}),  r_n = p Φ_n,  f_n = -h Φ_n.
/// PreconditionError if the contraction is invalid for q_1, Q is truncated
/// below N, or Q•Q != 0 up to N. Asserts R•R = 0 and F R = Q F up to N.
TransferResult transfer(const Coderivation &q, const Contraction &c, int max_arity);

} // namespace linf
