#pragma once

#include <map>

#include "linf/core/multilinear.hpp"

namespace linf {

/// Gerstenhaber product f∘g: g is inserted into consecutive slots of f,
///   (f∘g)(v_1..v_{i+j-1}) = Σ_k (-1)^{|g|(|v_1|+..+|v_k|)} f(v_1..v_k, g(v_{k+1}..v_{k+j}), ..).
/// Both maps must be endomorphism-type on the same space.
TensorMap gerstenhaber_product(const TensorMap &f, const TensorMap &g);

/// f∘g - (-1)^{|f||g|} g∘f.
TensorMap gerstenhaber_bracket(const TensorMap &f, const TensorMap &g);

/// Coderivation of the reduced tensor coalgebra, one TensorMap per arity.
/// All coefficients above `truncation` are unknown.
class TensorCoderivation {
public:
  TensorCoderivation(GradedSpace space, int degree, int truncation);

  const GradedSpace &space() const { return space_; }
  int degree() const { return degree_; }
  int truncation() const { return truncation_; }

  const TensorMap *coefficient(int arity) const;
  void set_coefficient(TensorMap t);
  const std::map<int, TensorMap> &taylor() const { return taylor_; }

  /// Coderivation product; arity n collects f_a∘g_b with a + b - 1 = n.
  friend TensorCoderivation operator*(const TensorCoderivation &f, const TensorCoderivation &g);

private:
  GradedSpace space_;
  int degree_;
  int truncation_;
  std::map<int, TensorMap> taylor_;
};

/// Graded commutator of tensor coderivations.
TensorCoderivation bracket(const TensorCoderivation &f, const TensorCoderivation &g);

} // namespace linf
