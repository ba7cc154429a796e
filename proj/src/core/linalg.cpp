#include "linf/core/linalg.hpp"

#include "linf/core/errors.hpp"

namespace linf {

void axpy(SparseVec &y, const Scalar &a, const SparseVec &x) {
  if (a.is_zero())
    return;
  for (const auto &[i, c] : x) {
    auto [it, inserted] = y.try_emplace(i, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second.is_zero())
        y.erase(it);
    }
  }
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // Pivot rows only contain indices >= their lead, so a sweep in increasing
  // index order clears every pivot column once.
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    Scalar factor = -it->second;
    axpy(v, factor, p->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  while (!v.empty()) {
    auto lead = v.begin();
    auto p = pivots_.find(lead->first);
    if (p == pivots_.end()) {
      Scalar inv = Scalar(1) / lead->second;
      for (auto &[i, c] : v)
        c *= inv;
      pivots_.emplace(lead->first, std::move(v));
      return true;
    }
    axpy(v, -lead->second, p->second);
  }
  return false;
}

std::size_t rank_of(const std::vector<SparseVec> &vectors) {
  EchelonBasis basis;
  for (const auto &v : vectors)
    basis.insert(v);
  return basis.rank();
}

namespace {

struct AugmentedRow {
  SparseVec coeffs;
  Scalar rhs;
  SparseVec combination; // which original rows were summed
};

} // namespace

LinearSolveResult solve_sparse(const std::vector<SparseVec> &rows, const std::vector<Scalar> &rhs,
                               int num_unknowns) {
  if (rows.size() != rhs.size())
    throw ArgumentError("solve_sparse: row/rhs count mismatch");
  std::map<int, AugmentedRow> pivots;
  LinearSolveResult result;

  for (std::size_t r = 0; r < rows.size(); ++r) {
    AugmentedRow row{rows[r], rhs[r], SparseVec{{static_cast<int>(r), Scalar(1)}}};
    for (const auto &[i, c] : row.coeffs)
      if (i < 0 || i >= num_unknowns)
        throw ArgumentError("solve_sparse: unknown index out of range");
    bool placed = false;
    while (!row.coeffs.empty()) {
      auto lead = row.coeffs.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        Scalar inv = Scalar(1) / lead->second;
        for (auto &[i, c] : row.coeffs)
          c *= inv;
        row.rhs *= inv;
        for (auto &[i, c] : row.combination)
          c *= inv;
        pivots.emplace(lead->first, std::move(row));
        placed = true;
        break;
      }
      Scalar factor = -lead->second;
      axpy(row.coeffs, factor, p->second.coeffs);
      row.rhs += factor * p->second.rhs;
      axpy(row.combination, factor, p->second.combination);
    }
    if (!placed && !row.rhs.is_zero()) {
      result.feasible = false;
      result.certificate = std::move(row.combination);
      result.first_inconsistent_row = static_cast<int>(r);
      return result;
    }
  }

  // back substitution from the highest pivot down
  std::map<int, Scalar> x;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto &[col, row] = *it;
    Scalar value = row.rhs;
    for (const auto &[i, c] : row.coeffs) {
      if (i == col)
        continue;
      auto xi = x.find(i);
      if (xi != x.end())
        value -= c * xi->second;
    }
    if (!value.is_zero())
      x.emplace(col, value);
  }
  result.feasible = true;
  result.solution = SparseVec(x.begin(), x.end());
  return result;
}

// ------------------------------------------------------------ DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar(1);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &o) const {
  if (cols_ != o.rows_)
    throw ArgumentError("DenseMatrix product: shape mismatch");
  DenseMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero())
          out(i, j) += a * o(k, j);
    }
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

std::pair<DenseMatrix, std::vector<std::size_t>> DenseMatrix::rref() const {
  DenseMatrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && m(sel, col).is_zero())
      ++sel;
    if (sel == rows_)
      continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(sel, j), m(row, j));
    Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t j = 0; j < cols_; ++j)
      m(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col).is_zero())
        continue;
      Scalar f = m(i, col);
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t DenseMatrix::rank() const { return rref().second.size(); }

std::vector<std::vector<Scalar>> DenseMatrix::nullspace() const {
  auto [r, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Scalar> v(cols_);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_)
    throw InversionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto [r, pivots] = aug.rref();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw InversionError("matrix is singular");
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = r(i, n + j);
  return out;
}

} // namespace linf
