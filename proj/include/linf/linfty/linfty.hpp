#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/coalgebra/morphism.hpp"
#include "linf/linfty/chain_complex.hpp"

// An L∞[1] structure on V is a reduced Coderivation of degree 1 with
// Q•Q = 0; its truncation is the highest arity it is known to.

namespace linf {

/// dg Lie algebra on the unshifted space L: d of degree 1, bracket of
/// degree 0, both given on all ordered basis tuples.
struct Dgla {
  GradedSpace space;
  TensorMap differential;
  TensorMap bracket;
};

/// The L∞[1] structure on L[1] with q_1 = -d, q_2(l_1 ⊙ l_2) = (-1)^{|l_1|}[l_1, l_2]
/// and nothing else. Exact. ArgumentError on wrong degrees or arities, or
/// a bracket that is not graded antisymmetric.
Coderivation from_dgla(const Dgla &dgla);

struct LinftyCheck {
  int max_arity = 0;
  /// Nonzero components of Q•Q at arities <= max_arity.
  std::map<int, SymMap> defects;

  bool passed() const { return defects.empty(); }
  std::optional<int> lowest_failure() const;
};

/// Computes Q•Q up to arity max_arity. ArgumentError if Q is not a reduced
/// degree-1 coderivation or is truncated below max_arity.
LinftyCheck check_linfty(const Coderivation &q, int max_arity);

/// Throws PreconditionError naming the arity when Q•Q != 0 up to `up_to`.
void require_linfty(const Coderivation &q, int up_to, const char *who);

struct TangentComplex {
  GradedSpace space;
  SymMap differential; ///< q_1
};

TangentComplex tangent(const Coderivation &q);

/// The tangent complex as a ChainComplex in the canonical basis, degree by degree.
ChainComplex as_chain_complex(const TangentComplex &t);

/// Cohomology dimension per degree (only nonzero entries).
std::map<int, int> cohomology_dimensions(const TangentComplex &t);

/// True iff f_1 induces an isomorphism on tangent cohomology in every
/// degree. Throws StructuralError naming the first arity <= up_to where F
/// does not intertwine Q (on the source) with R (on the target).
bool is_weak_equivalence(const CoalgebraMorphism &f, const Coderivation &q, const Coderivation &r,
                         int up_to);

} // namespace linf
