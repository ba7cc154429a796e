#pragma once

#include <map>
#include <vector>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/linfty/chain_complex.hpp"

namespace linf {

/// Elementary coderivation: its only Taylor coefficient sends the canonical
/// monomial `inputs` (empty for the unit) to the generator `output`.
struct ElementaryCoderivation {
  Word inputs;
  int output = 0;

  int arity() const { return static_cast<int>(inputs.size()); }
  friend auto operator<=>(const ElementaryCoderivation &, const ElementaryCoderivation &) = default;
};

int degree_of(const GradedSpace &space, const ElementaryCoderivation &e);

/// Elementary coderivations of arity in [min_arity, max_arity], grouped by
/// degree, ordered by (arity, inputs, output).
std::map<int, std::vector<ElementaryCoderivation>> elementary_basis(const GradedSpace &space,
                                                                    int min_arity, int max_arity);

Coderivation as_coderivation(const GradedSpace &space, const ElementaryCoderivation &e, Variant variant);

/// Computes [Q, E] for many elementary E at once, up to arity max_arity.
/// Q is reduced; the result is in the non-reduced tower when E has arity 0.
/// Uses the fact that an elementary E only sees monomials containing its
/// inputs, so each bracket costs a few lookups instead of a full product.
class ElementaryBracket {
public:
  ElementaryBracket(const Coderivation &q, int max_arity);

  /// Nonzero coefficients of [Q, E], keyed by (monomial, output generator).
  std::map<std::pair<Word, int>, Scalar> operator()(const ElementaryCoderivation &e) const;

private:
  Coderivation q_;
  int max_arity_;
  /// m -> list of (w, c): coefficient c of m in expand(Q, w).
  std::map<Word, std::vector<std::pair<Word, Scalar>>> occurrences_;
  std::vector<std::vector<Word>> monomials_; // by length
};

/// Truncated Chevalley–Eilenberg complex: coderivations with coefficients of
/// arity <= N (>= 1 for reduced, >= 0 for non-reduced), differential [Q, -]
/// modulo arities > N.
struct CeComplex {
  Variant variant = Variant::reduced;
  int max_arity = 0;
  std::map<int, std::vector<ElementaryCoderivation>> basis;
  ChainComplex complex;
};

/// PreconditionError if Q•Q != 0 where needed, or if Q is not known to the
/// arity the truncated differential requires (N, or N + 1 for non-reduced).
CeComplex ce_complex(const Coderivation &q, Variant variant, int max_arity);

struct HInjectivityDegree {
  int degree = 0;
  int reduced_cohomology = 0;
  int nonreduced_cohomology = 0;
  int kernel = 0;
};

struct HInjectivityReport {
  int max_arity = 0;
  std::vector<HInjectivityDegree> degrees; ///< every degree of the reduced complex
  bool injective() const;
  int total_kernel() const;
};

/// Kernel of the map induced on truncated CE cohomology by the inclusion
/// Coder(S̄V) -> Coder(SV). In degree k it has dimension
/// dim(B_nr ∩ C_red) - dim B_red = rank d_nr - rank(ev1 ∘ d_nr) - rank d_red
/// (differentials out of degree k - 1).
HInjectivityReport h_injectivity(const Coderivation &q, int max_arity);

} // namespace linf
