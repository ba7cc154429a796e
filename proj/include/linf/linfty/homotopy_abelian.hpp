#pragma once

#include <optional>

#include "linf/linfty/ce.hpp"
#include "linf/linfty/splitting.hpp"
#include "linf/linfty/transfer.hpp"

namespace linf {

/// Combined certificate at truncation N. At finite N only a refutation is
/// conclusive: SUPPORTED means every check passed up to N.
///
/// The three checks are run at matching levels: the splitting system and the
/// CE complexes at N (both use Q up to N + 1), the transfer up to N + 1. At
/// these levels the three conditions are equivalent, and the verdict
/// asserts that they agree.
struct HomotopyAbelianVerdict {
  int max_arity = 0;
  bool supported = false;
  /// Lowest arity of Q at which an obstruction appears: the lowest n >= 2
  /// with r_n != 0, equal to one more than the lowest infeasible splitting
  /// truncation.
  std::optional<int> refuted_at;

  SplittingResult splitting;
  HInjectivityReport injectivity;
  TransferResult transfer;
};

/// Needs Q to arity N + 1 with Q•Q = 0 there. InternalConsistencyError if the
/// sub-verdicts disagree.
HomotopyAbelianVerdict is_homotopy_abelian(const Coderivation &q, int max_arity);

} // namespace linf
