#pragma once

#include <map>
#include <optional>

#include "linf/coalgebra/coderivation.hpp"

namespace linf {

/// Degree-0 morphism of symmetric coalgebras S̄(source) -> S̄(target), given by
/// its Taylor coefficients f_n : source^{⊙n} -> target. Extended to the
/// non-reduced coalgebras by F(1) = 1.
class CoalgebraMorphism {
public:
  CoalgebraMorphism(GradedSpace source, GradedSpace target, int truncation = kExact);

  const GradedSpace &source() const { return source_; }
  const GradedSpace &target() const { return target_; }
  int truncation() const { return truncation_; }

  const SymMap *coefficient(int arity) const;
  void set_coefficient(SymMap f);
  const std::map<int, SymMap> &taylor() const { return taylor_; }

  static CoalgebraMorphism identity(const GradedSpace &space);
  /// Morphism with f_1 = map and nothing else.
  static CoalgebraMorphism linear(const SymMap &map);

private:
  GradedSpace source_;
  GradedSpace target_;
  int truncation_;
  std::map<int, SymMap> taylor_;
};

/// F(v_1 ⊙ ... ⊙ v_n) = Σ over set partitions ±f_{|B_1|}(v_{B_1}) ⊙ ... ⊙ f_{|B_k|}(v_{B_k}).
/// The empty monomial maps to the unit. PreconditionError beyond truncation.
SymElement apply_morphism(const CoalgebraMorphism &f, const Word &monomial);
SymElement apply_morphism(const CoalgebraMorphism &f, const SymElement &element);

/// G∘F (F applied first).
CoalgebraMorphism compose(const CoalgebraMorphism &g, const CoalgebraMorphism &f);

/// Inverse via the arity-by-arity recursion. InversionError when f_1 is
/// not invertible.
CoalgebraMorphism invert(const CoalgebraMorphism &f);

/// F⁻¹ R F for R a coderivation on the target of F. The result lives on
/// the source and has the variant of R.
Coderivation conjugate(const CoalgebraMorphism &f, const Coderivation &r);

/// Lowest arity n <= up_to where (F Q)_n != (R F)_n, i.e. where F fails to
/// intertwine the reduced coderivations Q (on the source) and R (on the target).
std::optional<int> intertwining_defect(const CoalgebraMorphism &f, const Coderivation &q,
                                       const Coderivation &r, int up_to);

} // namespace linf
