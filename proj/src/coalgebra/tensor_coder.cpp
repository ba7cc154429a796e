#include "linf/coalgebra/tensor_coder.hpp"

#include <algorithm>

#include "linf/core/errors.hpp"
#include "linf/core/permutation.hpp"

namespace linf {

TensorMap gerstenhaber_product(const TensorMap &f, const TensorMap &g) {
  if (!(f.source() == f.target()) || !(g.source() == g.target()) || !(f.source() == g.source()))
    throw StructuralError("Gerstenhaber product needs endomorphism-type maps on one space");
  const GradedSpace &space = f.source();
  const int i = f.arity(), j = g.arity();
  const int n = i + j - 1;
  TensorMap out(space, n, f.degree() + g.degree());
  if (f.is_zero() || g.is_zero())
    return out;

  for (const auto &w : tensor_words(space, n)) {
    Vector acc;
    int prefix = 0;
    for (int k = 0; k < i; ++k) {
      if (k > 0)
        prefix += space.degree(w[static_cast<std::size_t>(k - 1)]);
      Vector inner = g.evaluate(std::span<const int>(w).subspan(static_cast<std::size_t>(k),
                                                               static_cast<std::size_t>(j)));
      if (inner.is_zero())
        continue;
      const int sign = parity_sign(static_cast<long>(g.degree()) * prefix);
      Word arg(w.begin(), w.begin() + k);
      arg.push_back(0);
      arg.insert(arg.end(), w.begin() + k + j, w.end());
      for (const auto &[h, c] : inner) {
        arg[static_cast<std::size_t>(k)] = h;
        acc.add(f.evaluate(arg), c * Scalar(sign));
      }
    }
    if (!acc.is_zero())
      out.add(w, acc);
  }
  return out;
}

TensorMap gerstenhaber_bracket(const TensorMap &f, const TensorMap &g) {
  TensorMap fg = gerstenhaber_product(f, g);
  TensorMap gf = gerstenhaber_product(g, f);
  return fg - gf.scaled(Scalar(parity_sign(static_cast<long>(f.degree()) * g.degree())));
}

TensorCoderivation::TensorCoderivation(GradedSpace space, int degree, int truncation)
    : space_(std::move(space)), degree_(degree), truncation_(truncation) {}

const TensorMap *TensorCoderivation::coefficient(int arity) const {
  auto it = taylor_.find(arity);
  return it == taylor_.end() ? nullptr : &it->second;
}

void TensorCoderivation::set_coefficient(TensorMap t) {
  if (!(t.source() == space_) || !(t.target() == space_))
    throw StructuralError("tensor coefficient lives on a different space");
  if (t.degree() != degree_)
    throw ArgumentError("tensor coefficient has the wrong degree");
  if (t.arity() < 1 || t.arity() > truncation_)
    throw ArgumentError("tensor coefficient arity out of range");
  const int n = t.arity();
  if (t.is_zero())
    taylor_.erase(n);
  else
    taylor_.insert_or_assign(n, std::move(t));
}

TensorCoderivation operator*(const TensorCoderivation &f, const TensorCoderivation &g) {
  if (!(f.space_ == g.space_))
    throw StructuralError("tensor coderivations on different carriers");
  TensorCoderivation out(f.space_, f.degree_ + g.degree_, std::min(f.truncation_, g.truncation_));
  for (int n = 1; n <= out.truncation_; ++n) {
    TensorMap acc(f.space_, n, out.degree_);
    bool any = false;
    for (const auto &[a, fa] : f.taylor_) {
      const int b = n - a + 1;
      if (b < 1)
        break;
      if (const auto *gb = g.coefficient(b)) {
        acc += gerstenhaber_product(fa, *gb);
        any = true;
      }
    }
    if (any)
      out.set_coefficient(std::move(acc));
  }
  return out;
}

TensorCoderivation bracket(const TensorCoderivation &f, const TensorCoderivation &g) {
  TensorCoderivation fg = f * g;
  TensorCoderivation gf = g * f;
  const Scalar sign(parity_sign(static_cast<long>(f.degree()) * g.degree()));
  TensorCoderivation out(f.space(), fg.degree(), fg.truncation());
  for (int n = 1; n <= out.truncation(); ++n) {
    const TensorMap *a = fg.coefficient(n);
    const TensorMap *b = gf.coefficient(n);
    if (!a && !b)
      continue;
    TensorMap t(f.space(), n, out.degree());
    if (a)
      t += *a;
    if (b)
      t -= b->scaled(sign);
    out.set_coefficient(std::move(t));
  }
  return out;
}

} // namespace linf
