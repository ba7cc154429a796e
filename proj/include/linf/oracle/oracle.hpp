#pragma once

#include <map>

#include <optional>
#include <string>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/coalgebra/morphism.hpp"

// Brute-force reference implementations. Everything here is deliberately
// naive (full permutation sums, composition of expanded actions) and shares
// no summation code with the production paths it is used to check.

namespace linf::oracle {

/// Koszul sign by bubble-sorting the permutation and multiplying the sign
/// of every adjacent transposition.
int koszul_sign_bubble(std::span<const int> perm, std::span<const int> degrees);

/// Action of a coderivation on a monomial as a sum over all of S_n, with
/// weight 1/(i!(n-i)!) in place of the unshuffle restriction.
SymElement expand_all_permutations(const Coderivation &q, const Word &monomial);

/// q•r as the length-one part of Q∘R, with Q and R expanded by
/// expand_all_permutations, for arities up to max_arity.
Coderivation nr_product_by_composition(const Coderivation &q, const Coderivation &r, int max_arity);

/// F(v_1..v_n) as Σ_{k} 1/k! Σ over ordered decompositions and all of S_n.
SymElement morphism_all_permutations(const CoalgebraMorphism &f, const Word &monomial);

/// Raw dg Lie algebra data on the unshifted space: d of degree 1 and a
/// degree-0 bracket, each as tensor maps with no symmetry imposed.
struct DglaData {
  GradedSpace space;
  TensorMap differential;
  TensorMap bracket;
};

struct AxiomFailure {
  std::string axiom; ///< "antisymmetry", "d^2", "leibniz" or "jacobi"
  Word inputs;
};

/// Checks the dgla axioms directly on basis elements, in the order
/// antisymmetry, d² = 0, Leibniz, Jacobi. Returns the first failure.
std::optional<AxiomFailure> dgla_axioms(const DglaData &data);

/// The same axioms one at a time.
bool holds_antisymmetry(const DglaData &data);
bool holds_d_squared(const DglaData &data);
bool holds_leibniz(const DglaData &data);
bool holds_jacobi(const DglaData &data);

/// Φ(d)_n on an ordered basis tuple for a left pre-Lie product ▷, computed
/// from the recursion with every Gerstenhaber sum written out by hand:
///   Φ_2(x, y) = dx▷y + (-1)^{|x||d|} x▷dy - d(x▷y)
///   Φ_{n+1}(x, y..) = -Σ_k ±Φ_n(y.., x▷y_k, ..) + (-1)^{|d||x|} x▷Φ_n(y..)
/// Memoized per tuple.
class KapranovRecursion {
public:
  KapranovRecursion(TensorMap product, TensorMap d);

  Vector operator()(const Word &tuple);

private:
  Vector left_multiply(const Vector &x, const Vector &y) const;
  Vector compute(const Word &tuple);

  TensorMap product_;
  TensorMap d_;
  std::map<Word, Vector> memo_;
};

} // namespace linf::oracle
