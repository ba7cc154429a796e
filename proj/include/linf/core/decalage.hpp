#pragma once

#include "linf/core/multilinear.hpp"

namespace linf {

// Décalage between graded-antisymmetric maps on L and graded-symmetric maps
// on the suspension V = L[1] (generator degrees lowered by one). With |l_j|
// the degree in L of the j-th input (0-based), arity n:
//
//   q(l_0 ⊙ ... ⊙ l_{n-1}) = -(-1)^{Σ_j (n-1-j)(|l_j|-1)} l(l_0, ..., l_{n-1})
//
// This is the suspension sign of s ∘ l ∘ (s^{-1})^{⊗n} with an overall
// minus, which turns a dg Lie algebra (d, [,]) into q_1 = -d and
// q_2(l_0 ⊙ l_1) = (-1)^{|l_0|}[l_0, l_1]. A degree-k map on L becomes a
// degree k + n - 1 map on V.

/// Sign factor above, from the L-degrees of the inputs.
int decalage_sign(const GradedSpace &unshifted, const Word &inputs);

/// Graded-antisymmetric tensor map on L -> symmetric map on L[1].
/// Throws ArgumentError if the input is not graded antisymmetric.
SymMap decalage_down(const TensorMap &antisymmetric);

/// Symmetric map on V -> graded-antisymmetric tensor map on V[-1].
TensorMap decalage_up(const SymMap &symmetric);

} // namespace linf
