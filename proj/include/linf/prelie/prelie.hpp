#pragma once

#include <optional>
#include <string>

#include "linf/core/multilinear.hpp"

namespace linf {

enum class Chirality { left, right };

/// Graded pre-Lie algebra with a degree-0 product, ▷ for the left and ◁ for
/// the right chirality, and an optional degree-1 differential.
struct PreLieAlgebra {
  GradedSpace space;
  Chirality chirality = Chirality::left;
  TensorMap product;
  std::optional<TensorMap> differential;
};

struct PreLieCheck {
  /// Ordered basis triple on which the associator symmetry fails.
  std::optional<Word> associator_failure;
  /// Set when the associator symmetry holds but the commutator still breaks
  /// Jacobi, which would be an internal sign error.
  std::optional<Word> jacobi_failure;

  bool passed() const { return !associator_failure && !jacobi_failure; }
  std::string describe(const GradedSpace &space) const;
};

/// Left: (x▷y)▷z - x▷(y▷z) graded symmetric in x, y.
/// Right: (x◁y)◁z - x◁(y◁z) graded symmetric in y, z.
/// Exhaustive over ordered basis triples. Only the product is examined.
PreLieCheck check_prelie(const PreLieAlgebra &l);

/// x ▷ y = (-1)^{|x||y|+1} y ◁ x. Identity on left algebras.
/// PreconditionError if the input fails its own chirality check.
PreLieAlgebra right_to_left(const PreLieAlgebra &l);

/// [x, y] = x·y - (-1)^{|x||y|} y·x, the same for both chiralities.
/// StructuralError if the product is not pre-Lie.
TensorMap associated_bracket(const PreLieAlgebra &l);

/// ∇_x = x ▷ -, of degree |x| (left product; right algebras are converted).
TensorMap nabla(const PreLieAlgebra &l, const Vector &x);

/// ad_z = [z, -].
TensorMap inner_derivation(const PreLieAlgebra &l, const Vector &z);

/// d1 d2 - (-1)^{|d1||d2|} d2 d1.
TensorMap commutator(const TensorMap &d1, const TensorMap &d2);

struct DerivationCheck {
  std::optional<Word> bracket_failure; ///< pair breaking d[x,y] = [dx,y] + (-1)^{|d||x|}[x,dy]
  std::optional<int> square_failure;   ///< generator with d²(x) != 0
  std::optional<Word> product_failure; ///< pair breaking the same rule for ▷

  bool is_derivation() const { return !bracket_failure; }
  bool passed() const { return !bracket_failure && !square_failure; }
  bool is_product_derivation() const { return !product_failure; }
  std::string describe(const GradedSpace &space) const;
};

/// StructuralError if `l` is not pre-Lie or `d` is not an endomorphism of
/// its carrier.
DerivationCheck check_derivation(const PreLieAlgebra &l, const TensorMap &d);

/// W_n ⊗ Λθ: e_i ▷ e_j = j e_{i+j-1} (zero past n), with generators
/// e1..en in degree 0 and e1t..ent = e_i ⊗ θ in degree 1; differential
/// ad(e2 ⊗ θ) when n >= 2.
PreLieAlgebra vector_field_algebra(int n);

} // namespace linf
