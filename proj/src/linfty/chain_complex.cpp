#include "linf/linfty/chain_complex.hpp"

#include "linf/core/errors.hpp"

namespace linf {

void ChainComplex::set_dimension(int degree, int dim) {
  if (dim < 0)
    throw ArgumentError("negative dimension");
  if (dim == 0)
    dims_.erase(degree);
  else
    dims_[degree] = dim;
  rank_cache_.clear();
}

void ChainComplex::set_differential(int degree, std::vector<SparseVec> columns) {
  if (static_cast<int>(columns.size()) != dimension(degree))
    throw ArgumentError("differential has the wrong number of columns");
  const int target = dimension(degree + 1);
  for (const auto &col : columns)
    for (const auto &[i, c] : col)
      if (i < 0 || i >= target)
        throw ArgumentError("differential entry outside the target basis");
  d_[degree] = std::move(columns);
  rank_cache_.clear();
}

int ChainComplex::dimension(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

const std::vector<SparseVec> &ChainComplex::differential(int degree) const {
  static const std::vector<SparseVec> empty;
  auto it = d_.find(degree);
  return it == d_.end() ? empty : it->second;
}

std::vector<int> ChainComplex::degrees() const {
  std::vector<int> out;
  for (const auto &[k, n] : dims_)
    out.push_back(k);
  return out;
}

std::size_t ChainComplex::rank(int degree) const {
  auto it = rank_cache_.find(degree);
  if (it != rank_cache_.end())
    return it->second;
  std::size_t r = rank_of(differential(degree));
  rank_cache_.emplace(degree, r);
  return r;
}

int ChainComplex::cohomology_dimension(int degree) const {
  return dimension(degree) - static_cast<int>(rank(degree)) - static_cast<int>(rank(degree - 1));
}

std::optional<int> ChainComplex::d_squared_violation() const {
  for (const auto &[k, cols] : d_) {
    const auto &next = differential(k + 1);
    if (next.empty())
      continue;
    for (const auto &col : cols) {
      SparseVec image;
      for (const auto &[i, c] : col)
        axpy(image, c, next[static_cast<std::size_t>(i)]);
      if (!image.empty())
        return k;
    }
  }
  return std::nullopt;
}

} // namespace linf
