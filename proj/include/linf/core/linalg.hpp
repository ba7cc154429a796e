#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linf/core/scalar.hpp"

namespace linf {

/// Sparse row or column over Q, keyed by index. No stored zeros.
using SparseVec = std::map<int, Scalar>;

void axpy(SparseVec &y, const Scalar &a, const SparseVec &x);

/// Incremental Gaussian elimination over Q.
///
/// Vectors are inserted one at a time and reduced against the pivots seen
/// so far (leading-index pivoting). Used both for ranks of spans and for
/// membership tests.
class EchelonBasis {
public:
  /// Reduces v against the current pivots; true if it was independent (and
  /// is now a pivot).
  bool insert(SparseVec v);
  /// Reduction of v modulo the current span (empty iff v is in the span).
  SparseVec reduce(SparseVec v) const;
  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<int, SparseVec> pivots_; // leading index -> row with leading coefficient 1
};

/// Rank of a set of sparse vectors.
std::size_t rank_of(const std::vector<SparseVec> &vectors);

/// Result of solving A x = b with rows processed in the given order.
struct LinearSolveResult {
  bool feasible = false;
  /// Particular solution (free unknowns set to zero) when feasible.
  SparseVec solution;
  /// When infeasible: y with yᵀA = 0 and yᵀb != 0, keyed by row index.
  SparseVec certificate;
  /// When infeasible: index of the row whose insertion made the prefix
  /// system inconsistent.
  std::optional<int> first_inconsistent_row;
};

/// Solves A x = b where A is given by sparse rows. Rows are eliminated in
/// order and the solve stops at the first inconsistent prefix.
LinearSolveResult solve_sparse(const std::vector<SparseVec> &rows, const std::vector<Scalar> &rhs,
                               int num_unknowns);

/// Small dense matrix over Q for tangent-complex scale computations.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix &o) const;
  bool is_zero() const;
  friend bool operator==(const DenseMatrix &a, const DenseMatrix &b) = default;

  /// Reduced row echelon form and the pivot columns.
  std::pair<DenseMatrix, std::vector<std::size_t>> rref() const;
  std::size_t rank() const;
  /// Basis of the right null space, one vector per free column (free column
  /// entry 1), in increasing free-column order.
  std::vector<std::vector<Scalar>> nullspace() const;
  /// Throws InversionError if singular or not square.
  DenseMatrix inverse() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

} // namespace linf
