#pragma once

#include <optional>
#include <vector>

#include "linf/coalgebra/coderivation.hpp"

namespace linf {

/// A candidate splitting: for every basis vector v of V, a non-reduced
/// coderivation s(v) of degree |v|.
using SplittingMap = std::vector<Coderivation>;

struct SplittingResult {
  int max_arity = 0;
  bool feasible = false;
  /// s(v) = σ_v + Σ x E, when feasible.
  SplittingMap witness;
  /// When infeasible: lowest truncation arity N' <= max_arity at which the
  /// linear system already has no solution.
  std::optional<int> infeasible_at;
  /// Number of equations combined by the infeasibility certificate yᵀA = 0, yᵀb != 0.
  std::size_t certificate_size = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Solves for s : V -> Coder_{<=N}(SV) with ev1 ∘ s = id and
/// [Q, s(v)] = s(q_1 v) in arities 1..N. Unknowns are the reduced parts of
/// s(v). Needs Q to arity N + 1 and Q•Q = 0 there (PreconditionError).
SplittingResult find_splitting(const Coderivation &q, int max_arity);

struct WitnessFailure {
  int generator = 0;
  int arity = 0; ///< 0 for the ev1 condition
};

/// Checks ev1(s(v)) = v and [Q, s(v)] = s(q_1 v) up to arity N for every
/// basis vector v. Returns the first failure.
std::optional<WitnessFailure> verify_splitting_witness(const Coderivation &q, const SplittingMap &s,
                                                       int max_arity);

/// v ↦ σ_v, the splitting of an abelian structure.
SplittingMap sigma_splitting(const GradedSpace &space);

} // namespace linf
