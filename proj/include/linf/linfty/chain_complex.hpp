#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linf/core/linalg.hpp"

namespace linf {

/// Finite-dimensional cochain complex over Q with differentials of degree +1.
/// differential(k)[j] is the image of the j-th basis vector of degree k,
/// written in the basis of degree k + 1.
class ChainComplex {
public:
  void set_dimension(int degree, int dim);
  void set_differential(int degree, std::vector<SparseVec> columns);

  int dimension(int degree) const;
  const std::vector<SparseVec> &differential(int degree) const;
  /// Degrees with a nonzero component, ascending.
  std::vector<int> degrees() const;

  std::size_t rank(int degree) const;
  int cohomology_dimension(int degree) const;

  /// Lowest degree k with d^{k+1} d^k != 0, if any.
  std::optional<int> d_squared_violation() const;

private:
  std::map<int, int> dims_;
  std::map<int, std::vector<SparseVec>> d_;
  mutable std::map<int, std::size_t> rank_cache_;
};

} // namespace linf
