#include "linf/linfty/homotopy_abelian.hpp"

#include "linf/core/errors.hpp"

namespace linf {

HomotopyAbelianVerdict is_homotopy_abelian(const Coderivation &q, int max_arity) {
  SplittingResult split = find_splitting(q, max_arity);
  HInjectivityReport inj = h_injectivity(q, max_arity);
  TransferResult tr = transfer(q, contraction_from_cohomology(q.space(), q.coefficient_or_zero(1)), max_arity + 1);

  const bool massey_vanish = !tr.lowest_nonzero().has_value();
  if (split.feasible != inj.injective() || split.feasible != massey_vanish)
    throw InternalConsistencyError("homotopy-abelian checks disagree: splitting " +
                                   std::string(split.feasible ? "feasible" : "infeasible") + ", H(i) " +
                                   (inj.injective() ? "injective" : "not injective") + ", transfer " +
                                   (massey_vanish ? "abelian" : "not abelian"));
  if (!split.feasible && *split.infeasible_at + 1 != *tr.lowest_nonzero())
    throw InternalConsistencyError("splitting obstruction and first nonzero transferred bracket differ in arity");

  HomotopyAbelianVerdict out{max_arity, split.feasible, std::nullopt, std::move(split), std::move(inj),
                             std::move(tr)};
  if (!out.supported)
    out.refuted_at = out.transfer.lowest_nonzero();
  return out;
}

} // namespace linf
