#pragma once

#include <optional>

#include "linf/coalgebra/coderivation.hpp"
#include "linf/linfty/splitting.hpp"
#include "linf/prelie/prelie.hpp"

namespace linf {

enum class KapranovVariant { plain, alternating };

const char *variant_name(KapranovVariant v);

/// Φ(d)_1 .. Φ(d)_N as a reduced coderivation on the pre-Lie carrier.
struct KapranovTower {
  PreLieAlgebra base; ///< always left
  TensorMap derivation;
  KapranovVariant variant = KapranovVariant::plain;
  int max_arity = 0;
  Coderivation structure; ///< truncated at max_arity

  /// +1 for plain, -1 for alternating: the sign in front of ∇ in σ_x ± ∇_x.
  int witness_sign() const { return variant == KapranovVariant::plain ? 1 : -1; }
};

/// Plain: Φ_1 = d, Φ_2(x, y) = ∇_{dx}(y) - [d, ∇_x](y),
///        Φ_{n+1}(x, y_1..y_n) = -[Φ_n, ∇_x](y_1..y_n)   (n >= 2),
/// with Gerstenhaber brackets of tensor maps. Alternating: Φ_2 and the
/// recursion change sign. Every arity is checked to be graded symmetric
/// before it is stored; a failure throws InternalConsistencyError.
/// Right algebras are converted first. PreconditionError if the product is
/// not pre-Lie or d is not a bracket derivation.
KapranovTower kapranov(const PreLieAlgebra &l, const TensorMap &d, int max_arity,
                       KapranovVariant variant = KapranovVariant::plain);

/// q_n ↦ (-1)^{n+1} q_n.
Coderivation sign_automorphism(const Coderivation &q);

/// σ_x + sign·∇_x as a nonreduced coderivation.
Coderivation kapranov_witness(const PreLieAlgebra &l, int x, int sign);

struct RecursionFailure {
  int generator;
  int arity; ///< arity of Φ entering the failing component: component arity + 1
};

/// [Φ, σ_x ± ∇_x] = σ_{dx} ± ∇_{dx} up to component arity N - 1 for every
/// basis x.
/// `sign` defaults to the tower's own variant.
std::optional<RecursionFailure> verify_compact_recursion(const KapranovTower &tower,
                                                         std::optional<int> sign = {});

/// First arity <= N where [Φ(d1), Φ(d2)] and Φ([d1, d2]) differ.
/// PreconditionError unless both are bracket derivations.
std::optional<int> verify_lie_morphism(const PreLieAlgebra &l, const TensorMap &d1, const TensorMap &d2,
                                       int max_arity);

struct KapranovSplitting {
  SplittingMap witness;
  std::optional<WitnessFailure> failure;
};

/// s(x) = σ_x + ∇_x checked against `q` (normally the plain tower, which
/// must be known to arity N + 1) up to arity N. PreconditionError unless
/// d² = 0 and q passes check_linfty to N.
KapranovSplitting kapranov_splitting(const PreLieAlgebra &l, const Coderivation &q, int max_arity);

} // namespace linf
